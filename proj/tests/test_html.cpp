#include <catch2/catch_amalgamated.hpp>

#include "termforge/html.hpp"

using namespace termforge;

TEST_CASE("tags are stripped and script content excluded") {
    auto res = extract_text_and_links("<p>Hello <b>world</b></p><script>x()</script>",
                                      "http://e.com/");
    CHECK(res.text == "Hello world");
    CHECK(res.links.empty());
}

TEST_CASE("style and comments are excluded") {
    auto res = extract_text_and_links(
        "<style>p{color:red}</style><!-- hidden -->visible", "http://e.com/");
    CHECK(res.text == "visible");
}

TEST_CASE("relative links resolve against the base") {
    auto res = extract_text_and_links("<a href='/b'>x</a>", "http://e.com/a");
    REQUIRE(res.links.size() == 1);
    CHECK(res.links[0] == "http://e.com/b");
}

TEST_CASE("duplicate links collapse to first-seen order") {
    auto res = extract_text_and_links(
        "<a href=\"/one\">1</a><a href=\"/two\">2</a><a href=\"/one\">again</a>",
        "http://e.com/");
    REQUIRE(res.links.size() == 2);
    CHECK(res.links[0] == "http://e.com/one");
    CHECK(res.links[1] == "http://e.com/two");
}

TEST_CASE("block tags produce line breaks, inline tags vanish") {
    auto res = extract_text_and_links("<h1>Title</h1><p>One <i>two</i></p><p>Three</p>",
                                      "http://e.com/");
    CHECK(res.text == "Title\nOne two\nThree");
}

TEST_CASE("entities decode") {
    auto res = extract_text_and_links("a &amp; b &lt;c&gt; &#65; &quot;d&quot; &nbsp;e",
                                      "http://e.com/");
    CHECK(res.text == "a & b <c> A \"d\" e");
}

TEST_CASE("unclosed script does not eat the document") {
    auto res = extract_text_and_links("<script>var x;", "http://e.com/");
    CHECK(res.text.empty());
    CHECK(res.links.empty());
}

TEST_CASE("malformed html never throws") {
    auto res = extract_text_and_links("<<<>>><a href=<p>broken", "http://e.com/");
    CHECK(res.links.empty());
}

TEST_CASE("unsupported link schemes are dropped") {
    auto res = extract_text_and_links(
        "<a href='mailto:x@y.com'>m</a><a href='ftp://f.com/x'>f</a>"
        "<a href='http://ok.com/'>ok</a>",
        "http://e.com/");
    REQUIRE(res.links.size() == 1);
    CHECK(res.links[0] == "http://ok.com/");
}

TEST_CASE("uppercase tags and attributes work") {
    auto res = extract_text_and_links("<A HREF=\"/X\">x</A><SCRIPT>no</SCRIPT>",
                                      "http://e.com/");
    REQUIRE(res.links.size() == 1);
    CHECK(res.links[0] == "http://e.com/X");
    CHECK(res.text == "x");
}
