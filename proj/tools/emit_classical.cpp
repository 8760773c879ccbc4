// Writes a classical algebra with its Cartan rows in the plain-text format.
//   lietk-emit sl 3            sl(3)
//   lietk-emit sl 2 sl 3       sl(2) + sl(3), block Cartan
//   lietk-emit --json sp 2
#include "lietk/algebra_file.hpp"
#include "lietk/classical.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

int main(int argc, char** argv)
{
    CLI::App app{"Emit classical Lie algebras as algebra files", "lietk-emit"};
    std::vector<std::string> parts;
    bool as_json = false;
    app.add_option("parts", parts, "Pairs of family (gl, sl, so_odd, so_even, sp) and n")->required();
    app.add_flag("--json", as_json, "Emit JSON instead of plain text");
    CLI11_PARSE(app, argc, argv);

    if (parts.size() % 2 != 0) {
        std::cerr << "error: expected family/n pairs\n";
        return 2;
    }
    try {
        std::optional<lietk::AlgebraWithToral> sum;
        for (std::size_t p = 0; p < parts.size(); p += 2) {
            auto block = lietk::build_classical(lietk::parse_classical_family(parts[p]), std::stoul(parts[p + 1]));
            lietk::AlgebraWithToral piece{block.algebra, block.toral};
            sum = sum ? lietk::direct_sum(*sum, piece) : piece;
        }
        const auto file = lietk::make_algebra_file(*sum->algebra, sum->toral.chosen_basis());
        std::cout << (as_json ? lietk::to_json_text(file) : lietk::to_text(file));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
