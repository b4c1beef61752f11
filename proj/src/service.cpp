#include "sketchlayout/service.hpp"

#include <boost/beast/core/detail/base64.hpp>
#include <httplib.h>

#include "sketchlayout/error.hpp"
#include "sketchlayout/image_io.hpp"
#include "sketchlayout/serialize.hpp"

namespace sketchlayout {

namespace {

class HttpError : public std::runtime_error {
public:
    HttpError(int status, const std::string& what) : std::runtime_error(what), status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

std::vector<std::uint8_t> decode_base64(std::string text)
{
    if (const auto comma = text.find(','); text.rfind("data:", 0) == 0 && comma != std::string::npos)
        text.erase(0, comma + 1);
    std::erase_if(text, [](unsigned char c) { return std::isspace(c); });
    namespace b64 = boost::beast::detail::base64;
    std::vector<std::uint8_t> out(b64::decoded_size(text.size()));
    const auto [written, consumed] = b64::decode(out.data(), text.data(), text.size());
    std::size_t padding = 0;
    while (padding < 2 && consumed + padding < text.size() && text[consumed + padding] == '=')
        ++padding;
    if (consumed + padding != text.size())
        throw HttpError(400, "sketch is not valid base64");
    out.resize(written);
    return out;
}

template <typename T>
void override_field(const Json& cfg, const char* key, T& field)
{
    if (!cfg.contains(key))
        return;
    try {
        field = cfg.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw HttpError(400, std::string("config field '") + key + "' has the wrong type");
    }
}

PipelineConfig apply_overrides(PipelineConfig cfg, const Json& j)
{
    if (j.is_null())
        return cfg;
    if (!j.is_object())
        throw HttpError(400, "config must be an object");
    override_field(j, "threshold", cfg.binarize.threshold);
    override_field(j, "invert", cfg.binarize.invert);
    override_field(j, "chunk_size", cfg.trace.chunk_size);
    override_field(j, "tolerance_pct", cfg.tolerance_pct);
    override_field(j, "offset", cfg.chain.offset_threshold);
    override_field(j, "tau_factor", cfg.tau_factor);
    override_field(j, "epsilon", cfg.epsilon);
    override_field(j, "seed", cfg.layout.seed);
    override_field(j, "iterations", cfg.layout.iterations);
    override_field(j, "polish_iterations", cfg.layout.polish_iterations);
    override_field(j, "ideal_edge_length", cfg.layout.ideal_edge_length);
    override_field(j, "repulsion_strength", cfg.layout.repulsion_strength);
    override_field(j, "gravity_strength", cfg.layout.gravity_strength);
    override_field(j, "min_gap", cfg.layout.min_gap);
    override_field(j, "max_step", cfg.layout.max_step);
    override_field(j, "cooling", cfg.layout.cooling);
    return cfg;
}

int status_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::Io: return 400;
    case ErrorKind::NumericFailure: return 500;
    default: return 422;
    }
}

std::string error_body(const std::string& message) { return Json{{"error", message}}.dump(); }

Json respond(const Graph& graph, const PipelineResult& result)
{
    Json out = layout_to_json(result.layout, graph);
    out["constrained_report"] = report_to_json(result.constrained_report);
    out["chain"] = result.chain ? chain_to_json(*result.chain) : Json(nullptr);
    out["constraints"] = constraints_to_json(result.constraints, graph);
    out["mapping"] = result.mapping ? mapping_to_json(*result.mapping, graph) : Json(nullptr);
    out["strategy"] = to_string(result.strategy);
    out["warnings"] = result.warnings;
    return out;
}

} // namespace

ServiceResponse handle_layout_request(const std::string& body, const PipelineConfig& defaults)
{
    try {
        Json request;
        try {
            request = Json::parse(body);
        } catch (const nlohmann::json::parse_error& e) {
            throw HttpError(400, std::string("malformed JSON: ") + e.what());
        }
        if (!request.is_object())
            throw HttpError(400, "request body must be a JSON object");
        if (!request.contains("graph"))
            throw HttpError(400, "missing \"graph\"");
        if (!request.contains("sketch") || !request.at("sketch").is_string())
            throw HttpError(400, "missing base64 \"sketch\"");

        const Graph graph = graph_from_json(request.at("graph"));
        const Image sketch = decode_image(decode_base64(request.at("sketch").get<std::string>()));
        const PipelineConfig cfg = apply_overrides(defaults, request.value("config", Json()));

        const std::string mode = request.value("mode", std::string("full"));
        if (mode == "full")
            return {200, respond(graph, run_pipeline(graph, sketch, cfg)).dump()};
        if (mode != "incremental")
            throw HttpError(400, "mode must be \"full\" or \"incremental\"");

        if (!request.contains("selection") || !request.at("selection").is_array())
            throw HttpError(422, "incremental mode requires a \"selection\" array");
        if (!request.contains("prior"))
            throw HttpError(422, "incremental mode requires \"prior\" positions");
        std::vector<NodeIndex> selection;
        for (const auto& id : request.at("selection")) {
            if (!id.is_string())
                throw HttpError(400, "selection entries must be node ids");
            const auto v = graph.find(id.get<std::string>());
            if (!v)
                throw HttpError(422, "selection contains unknown node '" + id.get<std::string>() + "'");
            selection.push_back(*v);
        }
        const std::vector<Point> prior = positions_from_json(request.at("prior"), graph);
        return {200, respond(graph, run_incremental(graph, sketch, selection, prior, cfg)).dump()};
    } catch (const HttpError& e) {
        return {e.status(), error_body(e.what())};
    } catch (const Error& e) {
        return {status_for(e.kind()), error_body(std::string(to_string(e.kind())) + ": " + e.what())};
    } catch (const std::exception& e) {
        return {500, error_body(e.what())};
    }
}

void configure_service(httplib::Server& server, const ServiceOptions& options)
{
    server.set_payload_max_length(kMaxRequestBytes);

    server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(R"({"status":"ok"})", "application/json");
    });

    const PipelineConfig defaults = options.defaults;
    server.Post("/api/layout", [defaults](const httplib::Request& req, httplib::Response& res) {
        const ServiceResponse out = handle_layout_request(req.body, defaults);
        res.status = out.status;
        res.set_content(out.body, "application/json");
    });

    if (options.dev) {
        server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                    {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                    {"Access-Control-Allow-Headers", "Content-Type"}});
        server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    }

    if (options.static_dir && !server.set_mount_point("/", options.static_dir->string()))
        throw Error(ErrorKind::Io, "static directory not found: " + options.static_dir->string());
}

} // namespace sketchlayout
