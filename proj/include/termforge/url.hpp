#ifndef TERMFORGE_URL_HPP
#define TERMFORGE_URL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "termforge/common.hpp"

namespace termforge {

struct Url {
    std::string scheme;
    std::string host;
    int port = 0;  // 0 means scheme default
    std::string path;
    std::string query;

    std::string str() const {
        std::string out = scheme + "://" + host;
        if (port != 0) out += ":" + std::to_string(port);
        out += path;
        if (!query.empty()) out += "?" + query;
        return out;
    }

    int effective_port() const {
        if (port != 0) return port;
        return scheme == "https" ? 443 : 80;
    }
};

namespace detail {

inline bool url_chars_ok(std::string_view s) {
    for (unsigned char c : s)
        if (c <= ' ' || c == '<' || c == '>' || c == '"') return false;
    return true;
}

// Collapses "." and ".." segments; keeps a trailing slash if present.
inline std::string remove_dot_segments(std::string_view path) {
    std::vector<std::string> kept;
    bool trailing_slash = !path.empty() && path.back() == '/';
    size_t i = 0;
    while (i < path.size()) {
        while (i < path.size() && path[i] == '/') ++i;
        size_t j = i;
        while (j < path.size() && path[j] != '/') ++j;
        if (j > i) {
            std::string_view seg = path.substr(i, j - i);
            if (seg == ".") {
                trailing_slash = true;
            } else if (seg == "..") {
                if (!kept.empty()) kept.pop_back();
                trailing_slash = true;
            } else {
                kept.push_back(std::string(seg));
                trailing_slash = j < path.size() && path[j] == '/';
            }
        }
        i = j;
    }
    std::string out = "/";
    for (size_t k = 0; k < kept.size(); ++k) {
        out += kept[k];
        if (k + 1 < kept.size()) out += "/";
    }
    if (trailing_slash && !kept.empty()) out += "/";
    return out;
}

}  // namespace detail

inline std::optional<Url> parse_url(std::string_view raw) {
    std::string s = trim(raw);
    size_t frag = s.find('#');
    if (frag != std::string::npos) s.resize(frag);
    if (!detail::url_chars_ok(s)) return std::nullopt;

    size_t scheme_end = s.find("://");
    if (scheme_end == std::string::npos || scheme_end == 0) return std::nullopt;

    Url u;
    u.scheme = to_lower(s.substr(0, scheme_end));
    if (u.scheme != "http" && u.scheme != "https") return std::nullopt;

    size_t rest = scheme_end + 3;
    size_t path_start = s.find_first_of("/?", rest);
    std::string authority = s.substr(rest, (path_start == std::string::npos ? s.size() : path_start) - rest);
    if (authority.empty()) return std::nullopt;

    size_t colon = authority.rfind(':');
    if (colon != std::string::npos && colon + 1 < authority.size() &&
        authority.find_first_not_of("0123456789", colon + 1) == std::string::npos) {
        int port = 0;
        for (size_t k = colon + 1; k < authority.size(); ++k) {
            port = port * 10 + (authority[k] - '0');
            if (port > 65535) return std::nullopt;
        }
        u.port = port;
        authority.resize(colon);
    } else if (colon != std::string::npos && colon + 1 == authority.size()) {
        authority.resize(colon);
    }
    if (authority.empty()) return std::nullopt;
    u.host = to_lower(authority);

    std::string path_query;
    if (path_start != std::string::npos) path_query = s.substr(path_start);
    size_t q = path_query.find('?');
    if (q != std::string::npos) {
        u.query = path_query.substr(q + 1);
        path_query.resize(q);
    }
    u.path = path_query.empty() ? "/" : detail::remove_dot_segments(path_query);

    if ((u.scheme == "http" && u.port == 80) || (u.scheme == "https" && u.port == 443))
        u.port = 0;
    return u;
}

// Normalized form or nullopt for unsupported schemes and garbage.
inline std::optional<std::string> canonicalize_url(std::string_view raw) {
    auto u = parse_url(raw);
    if (!u) return std::nullopt;
    return u->str();
}

// RFC 3986 style relative resolution, restricted to the cases a crawler
// meets in practice: absolute, scheme-relative, root-relative, relative,
// and query-only references.
inline std::optional<std::string> resolve_url(const Url& base, std::string_view ref_raw) {
    std::string ref = trim(ref_raw);
    size_t frag = ref.find('#');
    if (frag != std::string::npos) ref.resize(frag);
    if (ref.empty() || !detail::url_chars_ok(ref)) return std::nullopt;

    if (ref.find("://") != std::string::npos) return canonicalize_url(ref);
    if (ref.rfind("//", 0) == 0) return canonicalize_url(base.scheme + ":" + ref);

    if (ref[0] == '?') return canonicalize_url(base.str().substr(0, base.str().find('?')) + ref);

    std::string merged;
    if (ref[0] == '/') {
        merged = ref;
    } else {
        size_t colon = ref.find(':');
        size_t slash = ref.find('/');
        if (colon != std::string::npos && (slash == std::string::npos || colon < slash))
            return std::nullopt;  // mailto:, javascript:, tel:, data:
        std::string dir = base.path.substr(0, base.path.rfind('/') + 1);
        merged = dir + ref;
    }
    Url u = base;
    u.query.clear();
    size_t q = merged.find('?');
    if (q != std::string::npos) {
        u.query = merged.substr(q + 1);
        merged.resize(q);
    }
    u.path = detail::remove_dot_segments(merged);
    return u.str();
}

inline std::string url_host(std::string_view canonical) {
    auto u = parse_url(canonical);
    return u ? u->host : std::string();
}

}  // namespace termforge

#endif
