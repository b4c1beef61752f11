#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "sketchlayout/pipeline.hpp"

namespace httplib {
class Server;
}

namespace sketchlayout {

inline constexpr std::size_t kMaxRequestBytes = 16u * 1024u * 1024u;

struct ServiceOptions {
    PipelineConfig defaults;
    std::optional<std::filesystem::path> static_dir;
    bool dev = false; // permissive CORS for a separately served UI
};

struct ServiceResponse {
    int status = 200;
    std::string body;
};

/// Handles one POST /api/layout body. Never throws; failures map to 400
/// (malformed), 422 (validation) or 500 (numeric failure).
ServiceResponse handle_layout_request(const std::string& body, const PipelineConfig& defaults);

/// Registers the API routes (and static files, if configured) on `server`.
void configure_service(httplib::Server& server, const ServiceOptions& options);

} // namespace sketchlayout
