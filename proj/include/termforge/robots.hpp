#ifndef TERMFORGE_ROBOTS_HPP
#define TERMFORGE_ROBOTS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "termforge/common.hpp"

namespace termforge {

struct RobotsRules {
    struct Rule {
        bool allow = false;
        std::string prefix;
    };
    std::vector<Rule> rules;

    // Longest matching prefix decides; an allow rule wins a length tie.
    // No rule matching means the path is allowed.
    bool allows(std::string_view path) const {
        size_t best_len = 0;
        bool verdict = true;
        bool matched = false;
        for (const Rule& r : rules) {
            if (path.substr(0, r.prefix.size()) != r.prefix) continue;
            if (!matched || r.prefix.size() > best_len) {
                matched = true;
                best_len = r.prefix.size();
                verdict = r.allow;
            } else if (r.prefix.size() == best_len && r.allow) {
                verdict = true;
            }
        }
        return verdict;
    }
};

// Minimal robots.txt reader: User-agent groups with Allow/Disallow prefix
// rules. The group whose agent token equals the product name (the part of
// the user agent before '/') is preferred over the "*" group. Empty
// Disallow values and unknown directives are ignored.
inline RobotsRules parse_robots(std::string_view body, std::string_view user_agent) {
    std::string product = to_lower(user_agent);
    product = product.substr(0, product.find_first_of("/ \t"));

    struct Group {
        std::vector<std::string> agents;
        std::vector<RobotsRules::Rule> rules;
    };
    std::vector<Group> groups;
    bool in_rules = false;

    for (const std::string& raw : split_lines(body)) {
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string key = to_lower(trim(line.substr(0, colon)));
        std::string value = trim(line.substr(colon + 1));

        if (key == "user-agent") {
            if (groups.empty() || in_rules) {
                groups.push_back({});
                in_rules = false;
            }
            groups.back().agents.push_back(to_lower(value));
        } else if (key == "disallow" || key == "allow") {
            if (groups.empty()) continue;
            in_rules = true;
            if (!value.empty()) groups.back().rules.push_back({key == "allow", value});
        }
    }

    auto find_group = [&](const std::string& agent) -> const Group* {
        for (const Group& g : groups)
            for (const std::string& a : g.agents)
                if (a == agent) return &g;
        return nullptr;
    };

    const Group* chosen = find_group(product);
    if (!chosen) chosen = find_group("*");

    RobotsRules out;
    if (chosen) out.rules = chosen->rules;
    return out;
}

}  // namespace termforge

#endif
