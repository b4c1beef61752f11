// Command-line front end: lay out a graph following a hand-drawn sketch.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sketchlayout/error.hpp"
#include "sketchlayout/image_io.hpp"
#include "sketchlayout/pipeline.hpp"
#include "sketchlayout/serialize.hpp"
#include "sketchlayout/svg.hpp"

using namespace sketchlayout;

namespace {

std::string read_text(const std::string& path)
{
    const auto bytes = read_file(path);
    return {bytes.begin(), bytes.end()};
}

std::vector<std::string> split_ids(const std::string& list)
{
    std::vector<std::string> out;
    std::stringstream in(list);
    std::string id;
    while (std::getline(in, id, ','))
        if (!id.empty())
            out.push_back(id);
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sketch-guided graph layout"};

    std::string graph_path, sketch_path, out_path, svg_path, chain_path, constraints_path, select, prior_path;
    PipelineConfig cfg;

    app.add_option("--graph", graph_path, "Graph as JSON or edge list")->required()->check(CLI::ExistingFile);
    app.add_option("--sketch", sketch_path, "Sketch image (PNG or PGM)")->required()->check(CLI::ExistingFile);
    app.add_option("--out", out_path, "Write layout JSON here instead of stdout");
    app.add_option("--svg", svg_path, "Write an SVG drawing of the layout");
    app.add_option("--dump-chain", chain_path, "Write the extracted segment chain as JSON");
    app.add_option("--dump-constraints", constraints_path, "Write the generated constraints as JSON");
    app.add_option("--seed", cfg.layout.seed, "Seed for every random choice")->capture_default_str();
    app.add_option("--epsilon", cfg.epsilon, "Slope threshold for direction classification")->capture_default_str();
    app.add_option("--tolerance-pct", cfg.tolerance_pct, "Simplification tolerance, percent of sketch diagonal")
        ->capture_default_str();
    app.add_option("--offset", cfg.chain.offset_threshold, "Max gap (px) when joining strokes")->capture_default_str();
    app.add_option("--tau-factor", cfg.tau_factor, "Cycle acceptance factor")->capture_default_str();
    app.add_option("--iterations", cfg.layout.iterations, "Constrained layout iterations")->capture_default_str();
    app.add_option("--polish", cfg.layout.polish_iterations, "Unconstrained polish iterations")->capture_default_str();
    app.add_option("--threshold", cfg.binarize.threshold, "Luminance threshold for stroke pixels")->capture_default_str();
    app.add_flag("--invert", cfg.binarize.invert, "Treat light pixels as strokes");
    app.add_option("--chunk-size", cfg.trace.chunk_size, "Skeleton tracing chunk size (px)")->capture_default_str();
    auto* select_opt = app.add_option("--select", select, "Comma-separated node ids to re-lay out");
    auto* prior_opt = app.add_option("--prior", prior_path, "Prior layout JSON for incremental mode")->check(CLI::ExistingFile);
    select_opt->needs(prior_opt);
    prior_opt->needs(select_opt);

    CLI11_PARSE(app, argc, argv);

    try {
        const Graph graph = parse_graph(read_text(graph_path));
        const Image sketch = read_image(sketch_path);

        PipelineResult result;
        if (!select.empty()) {
            std::vector<NodeIndex> selection;
            for (const auto& id : split_ids(select)) {
                const auto v = graph.find(id);
                if (!v)
                    throw Error(ErrorKind::Validation, "selected node '" + id + "' is not in the graph");
                selection.push_back(*v);
            }
            const auto prior = positions_from_json(Json::parse(read_text(prior_path)), graph);
            result = run_incremental(graph, sketch, selection, prior, cfg);
        } else {
            result = run_pipeline(graph, sketch, cfg);
        }

        for (const auto& w : result.warnings)
            std::cerr << "warning: " << w << '\n';

        const std::string layout = layout_to_json(result.layout, graph).dump(2) + "\n";
        if (out_path.empty())
            std::cout << layout;
        else
            write_file(out_path, layout);
        if (!svg_path.empty())
            write_file(svg_path, render_svg(graph, result.layout.positions));
        if (!chain_path.empty()) {
            const Json chain = result.chain ? chain_to_json(*result.chain) : Json(nullptr);
            write_file(chain_path, chain.dump(2) + "\n");
        }
        if (!constraints_path.empty())
            write_file(constraints_path, constraints_to_json(result.constraints, graph).dump(2) + "\n");
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
