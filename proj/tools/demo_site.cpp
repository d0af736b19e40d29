// Serves the bundled fixture site so the crawler has a safe local target
// for demos and end-to-end runs.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fixture_pages.hpp"
#include "httplib.h"

int main(int argc, char** argv) {
    CLI::App app{"local fixture site for crawler demos"};
    int port = 8080;
    int pages = 30;
    std::string host = "127.0.0.1";
    app.add_option("--port", port, "port to listen on (0 picks a free port)")
        ->capture_default_str();
    app.add_option("--pages", pages, "number of pages to serve")
        ->capture_default_str();
    app.add_option("--host", host, "address to bind")->capture_default_str();
    CLI11_PARSE(app, argc, argv);
    if (pages < 1) {
        std::cerr << "error: --pages must be at least 1\n";
        return 1;
    }

    httplib::Server server;
    server.Get(R"(/p(\d+)\.html)",
               [&](const httplib::Request& req, httplib::Response& res) {
                   int i = -1;
                   try {
                       i = std::stoi(req.matches[1]);
                   } catch (const std::exception&) {
                   }
                   if (i < 0 || i >= pages) {
                       res.status = 404;
                       return;
                   }
                   res.set_content(fixture::page_html(i, pages), "text/html");
               });
    server.Get("/robots.txt", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(fixture::robots_txt(), "text/plain");
    });

    if (port == 0) {
        port = server.bind_to_any_port(host);
        if (port < 0) {
            std::cerr << "error: cannot bind " << host << "\n";
            return 1;
        }
        std::cout << "serving " << pages << " pages at http://" << host << ":"
                  << port << "/p0.html" << std::endl;
        return server.listen_after_bind() ? 0 : 1;
    }
    std::cout << "serving " << pages << " pages at http://" << host << ":" << port
              << "/p0.html" << std::endl;
    return server.listen(host, port) ? 0 : 1;
}
