#ifndef TERMFORGE_HTTP_FETCHER_HPP
#define TERMFORGE_HTTP_FETCHER_HPP

#include <httplib.h>

#include <string>
#include <utility>

#include "termforge/fetch.hpp"

namespace termforge {

// One short-lived client per request; safe for concurrent get() calls.
// https needs a build with CPPHTTPLIB_OPENSSL_SUPPORT; without it those
// URLs fail as a transport error and the crawler skips them.
class HttpFetcher : public Fetcher {
public:
    HttpFetcher(int timeout_s, std::string user_agent)
        : timeout_s_(timeout_s), user_agent_(std::move(user_agent)) {}

    FetchResult get(const Url& url) override {
        FetchResult out;
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
        if (url.scheme == "https") {
            out.error = "https requires an SSL-enabled build";
            return out;
        }
#endif
        httplib::Client client(url.scheme + "://" + url.host + ":" +
                               std::to_string(url.effective_port()));
        client.set_connection_timeout(timeout_s_, 0);
        client.set_read_timeout(timeout_s_, 0);
        client.set_follow_location(true);

        std::string target = url.path;
        if (!url.query.empty()) target += "?" + url.query;
        httplib::Headers headers = {{"User-Agent", user_agent_}};
        auto res = client.Get(target, headers);
        if (!res) {
            out.error = httplib::to_string(res.error());
            return out;
        }
        out.status = res->status;
        out.content_type = res->get_header_value("Content-Type");
        out.body = res->body;
        return out;
    }

private:
    int timeout_s_;
    std::string user_agent_;
};

}  // namespace termforge

#endif
