#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <httplib.h>

#include "sketchlayout/error.hpp"
#include "sketchlayout/service.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"HTTP service for sketch-guided graph layout"};

    int port = 8080;
    if (const char* env = std::getenv("SKETCHLAYOUT_PORT"))
        port = std::atoi(env);
    std::string host = "0.0.0.0";
    std::string static_dir;
    sketchlayout::ServiceOptions options;

    app.add_option("--port", port, "Listening port (env SKETCHLAYOUT_PORT)")->capture_default_str();
    app.add_option("--host", host, "Bind address")->capture_default_str();
    app.add_option("--static", static_dir, "Directory with the built UI to serve at /");
    app.add_flag("--dev", options.dev, "Allow cross-origin requests from a dev UI server");
    CLI11_PARSE(app, argc, argv);

    if (!static_dir.empty())
        options.static_dir = static_dir;

    httplib::Server server;
    try {
        sketchlayout::configure_service(server, options);
    } catch (const sketchlayout::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    std::cerr << "listening on " << host << ':' << port << '\n';
    if (!server.listen(host, port)) {
        std::cerr << "error: cannot listen on " << host << ':' << port << '\n';
        return 1;
    }
    return 0;
}
