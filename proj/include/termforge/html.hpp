#ifndef TERMFORGE_HTML_HPP
#define TERMFORGE_HTML_HPP

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "termforge/common.hpp"
#include "termforge/url.hpp"

namespace termforge {

struct ExtractResult {
    std::string text;
    std::vector<std::string> links;
};

namespace detail {

inline const std::unordered_set<std::string>& block_tags() {
    static const std::unordered_set<std::string> tags = {
        "p", "div", "br", "h1", "h2", "h3", "h4", "h5", "h6", "li", "ul",
        "ol", "table", "tr", "td", "th", "blockquote", "pre", "hr",
        "section", "article", "header", "footer", "nav", "aside", "form",
        "main", "figure", "figcaption", "dl", "dt", "dd", "title", "body",
        "head", "html", "option", "select", "textarea", "noscript"};
    return tags;
}

inline void append_entity(std::string_view name, std::string& out) {
    if (name == "amp") out += '&';
    else if (name == "lt") out += '<';
    else if (name == "gt") out += '>';
    else if (name == "quot") out += '"';
    else if (name == "apos" || name == "#39") out += '\'';
    else if (name == "nbsp") out += ' ';
    else if (name.size() > 1 && name[0] == '#') {
        int code = 0;
        bool hex = name[1] == 'x' || name[1] == 'X';
        for (size_t i = hex ? 2 : 1; i < name.size(); ++i) {
            char c = name[i];
            int d;
            if (c >= '0' && c <= '9') d = c - '0';
            else if (hex && c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else if (hex && c >= 'A' && c <= 'F') d = c - 'A' + 10;
            else return;
            code = code * (hex ? 16 : 10) + d;
            if (code > 0x10FFFF) return;
        }
        if (code >= 32 && code < 127) out += static_cast<char>(code);
        else out += ' ';
    }
    // Unknown entities are dropped rather than echoed.
}

inline std::string decode_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '&') {
            size_t semi = s.find(';', i + 1);
            if (semi != std::string::npos && semi - i <= 10) {
                append_entity(s.substr(i + 1, semi - i - 1), out);
                i = semi;
                continue;
            }
        }
        out += s[i];
    }
    return out;
}

// Returns the value of an attribute inside a raw tag body, or empty.
inline std::string attr_value(std::string_view tag_body, std::string_view name) {
    std::string lower = to_lower(tag_body);
    size_t pos = 0;
    while ((pos = lower.find(name, pos)) != std::string::npos) {
        size_t after = pos + name.size();
        bool boundary_before = pos == 0 || std::isspace(static_cast<unsigned char>(lower[pos - 1]));
        pos = after;
        if (!boundary_before) continue;
        while (after < tag_body.size() && std::isspace(static_cast<unsigned char>(tag_body[after]))) ++after;
        if (after >= tag_body.size() || tag_body[after] != '=') continue;
        ++after;
        while (after < tag_body.size() && std::isspace(static_cast<unsigned char>(tag_body[after]))) ++after;
        if (after >= tag_body.size()) return "";
        char quote = tag_body[after];
        if (quote == '"' || quote == '\'') {
            size_t end = tag_body.find(quote, after + 1);
            if (end == std::string::npos) return "";
            return std::string(tag_body.substr(after + 1, end - after - 1));
        }
        size_t end = after;
        while (end < tag_body.size() && !std::isspace(static_cast<unsigned char>(tag_body[end])) &&
               tag_body[end] != '>')
            ++end;
        return std::string(tag_body.substr(after, end - after));
    }
    return "";
}

}  // namespace detail

// Tag-stripping extractor: script/style/comments dropped, block tags open a
// new line, inline tags vanish, entities decoded. Anchor hrefs are resolved
// against base_url and deduplicated in first-seen order.
inline ExtractResult extract_text_and_links(std::string_view html, const std::string& base_url) {
    ExtractResult res;
    auto base = parse_url(base_url);

    std::string text;
    std::unordered_set<std::string> seen;
    size_t i = 0;
    const size_t n = html.size();

    auto skip_until = [&](std::string_view close) {
        std::string lower_close = to_lower(close);
        while (i < n) {
            if (html[i] == '<') {
                std::string_view rest = html.substr(i, close.size());
                if (to_lower(rest) == lower_close) {
                    size_t gt = html.find('>', i);
                    i = gt == std::string::npos ? n : gt + 1;
                    return;
                }
            }
            ++i;
        }
    };

    while (i < n) {
        char c = html[i];
        if (c != '<') {
            size_t next = html.find('<', i);
            if (next == std::string::npos) next = n;
            text += detail::decode_entities(html.substr(i, next - i));
            i = next;
            continue;
        }
        if (html.substr(i, 4) == "<!--") {
            size_t end = html.find("-->", i + 4);
            i = end == std::string::npos ? n : end + 3;
            continue;
        }
        size_t gt = html.find('>', i);
        if (gt == std::string::npos) break;
        std::string_view body = html.substr(i + 1, gt - i - 1);
        i = gt + 1;
        if (body.empty()) continue;

        bool closing = body[0] == '/';
        size_t name_start = closing ? 1 : 0;
        size_t name_end = name_start;
        while (name_end < body.size() && (std::isalnum(static_cast<unsigned char>(body[name_end]))))
            ++name_end;
        std::string tag = to_lower(body.substr(name_start, name_end - name_start));
        if (tag.empty()) continue;

        if (!closing && tag == "script") { skip_until("</script"); continue; }
        if (!closing && tag == "style") { skip_until("</style"); continue; }

        if (detail::block_tags().count(tag)) {
            if (!text.empty() && text.back() != '\n') text += '\n';
        }

        if (!closing && tag == "a" && base) {
            std::string href = detail::attr_value(body.substr(name_end), "href");
            if (!href.empty()) {
                if (auto link = resolve_url(*base, detail::decode_entities(href))) {
                    if (seen.insert(*link).second) res.links.push_back(*link);
                }
            }
        }
    }

    // Squeeze runs of blank lines and trailing space so downstream
    // sentence splitting sees clean paragraph boundaries.
    std::string cleaned;
    cleaned.reserve(text.size());
    int pending_newlines = 0;
    size_t line_start = 0;
    auto flush_line = [&](std::string_view line) {
        std::string t = join(split_ws(line), " ");
        if (t.empty()) {
            if (pending_newlines == 1) pending_newlines = 2;
            return;
        }
        if (!cleaned.empty()) cleaned.append(pending_newlines >= 2 ? "\n\n" : "\n");
        cleaned += t;
        pending_newlines = 1;
    };
    for (size_t k = 0; k <= text.size(); ++k) {
        if (k == text.size() || text[k] == '\n') {
            flush_line(std::string_view(text).substr(line_start, k - line_start));
            line_start = k + 1;
        }
    }
    res.text = std::move(cleaned);
    return res;
}

}  // namespace termforge

#endif
