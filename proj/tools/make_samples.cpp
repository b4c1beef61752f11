// Writes a handful of ready-made graphs and sketches for trying the CLI and
// the service by hand.

#include <filesystem>
#include <iostream>

#include "sketchlayout/image_io.hpp"
#include "sketchlayout/samples.hpp"
#include "sketchlayout/serialize.hpp"

using namespace sketchlayout;

int main(int argc, char** argv)
{
    const std::filesystem::path dir = argc > 1 ? argv[1] : "samples";
    std::filesystem::create_directories(dir);

    write_png(dir / "rectangle.png", samples::rectangle_sketch());
    write_png(dir / "lshape.png", samples::l_shape_sketch());
    write_png(dir / "line.png", samples::horizontal_line_sketch());
    write_png(dir / "circle.png", samples::circle_sketch());
    write_png(dir / "zigzag.png", samples::zigzag_sketch());

    write_file(dir / "cycle24.json", graph_to_json(samples::cycle(24)).dump(2) + "\n");
    write_file(dir / "tree.json", graph_to_json(samples::tree(40, 3)).dump(2) + "\n");
    write_file(dir / "grid.json", graph_to_json(samples::grid(6, 6)).dump(2) + "\n");
    write_file(dir / "random.json", graph_to_json(samples::random_connected(120, 150, 7)).dump(2) + "\n");

    std::cout << "wrote samples to " << dir << '\n';
    return 0;
}
