#ifndef TERMFORGE_FETCH_HPP
#define TERMFORGE_FETCH_HPP

#include <string>

#include "termforge/common.hpp"
#include "termforge/url.hpp"

namespace termforge {

struct FetchResult {
    // HTTP status code; 0 means the transport itself failed.
    int status = 0;
    std::string content_type;
    std::string body;
    // Transport failure description, set only when status == 0.
    std::string error;

    bool ok_html() const {
        if (status != 200) return false;
        if (content_type.empty()) return true;
        return to_lower(content_type).rfind("text/html", 0) == 0;
    }
};

// Implementations must tolerate concurrent get() calls from multiple
// threads when the crawler runs with more than one fetch worker.
class Fetcher {
public:
    virtual ~Fetcher() = default;
    virtual FetchResult get(const Url& url) = 0;
};

}  // namespace termforge

#endif
