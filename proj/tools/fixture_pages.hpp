#pragma once

// Deterministic fixture site: n interlinked pages of dermatology notes,
// written so every body sentence clears the crawler's retention filter
// and mentions the topic in lowercase at least once per page.

#include <string>
#include <vector>

namespace fixture {

inline const std::vector<std::string>& sentence_pool() {
    static const std::vector<std::string> pool = {
        "People with vitiligo can see a white patch on the skin.",
        "The white patch can spread when the pigment cells stop making melanin.",
        "Doctors call this skin condition vitiligo.",
        "Narrowband uvb therapy is a common treatment for vitiligo.",
        "Uvb therapy can help the skin patch get back its color.",
        "A topical steroid can slow generalized vitiligo in many people.",
        "Segmental vitiligo appears on one side of the body.",
        "Melanin gives the skin and the hair their color.",
        "The pigment cells in the skin make melanin all the time.",
        "Many people try narrowband uvb therapy before a topical steroid.",
        "A steroid cream is one topical steroid that doctors use for the skin.",
        "Light therapy and uvb therapy are close treatments for a white patch.",
    };
    return pool;
}

inline std::string page_html(int i, int n) {
    const std::vector<std::string>& pool = sentence_pool();
    std::vector<std::string> sentences;
    sentences.push_back(pool[2]);
    for (int j = 0; j < 9; ++j) {
        size_t pick = static_cast<size_t>(i * 5 + j * (1 + i % 4)) % pool.size();
        sentences.push_back(pool[pick]);
    }

    std::string body;
    for (size_t k = 0; k < sentences.size(); ++k) {
        if (k % 3 == 0) body += "<p>";
        body += sentences[k];
        if (k % 3 == 2 || k + 1 == sentences.size())
            body += "</p>\n";
        else
            body += ' ';
    }

    std::string links;
    auto add_link = [&](int target) {
        if (target >= 0 && target < n && target != i)
            links += "<li><a href=\"/p" + std::to_string(target) + ".html\">notes " +
                     std::to_string(target) + "</a></li>\n";
    };
    add_link(i + 1);
    add_link(2 * i + 1);
    add_link(2 * i + 2);

    std::string title = "Vitiligo study notes " + std::to_string(i);
    return "<html><head><title>" + title + "</title></head>\n<body>\n<h1>" +
           title + "</h1>\n" + body + "<ul>\n" + links + "</ul>\n</body></html>\n";
}

inline std::string robots_txt() { return "User-agent: *\nAllow: /\n"; }

}  // namespace fixture
