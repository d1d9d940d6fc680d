// Regenerates the shipped bundle fixtures: the two worked examples and the
// 1-3 qubit Pauli groups.

#include <filesystem>
#include <iostream>

#include "cliffcode/bundle.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: fixture_gen <output-dir>\n";
        return 2;
    }
    std::filesystem::path dir(argv[1]);
    std::filesystem::create_directories(dir);
    using namespace cliffcode;
    try {
        save_bundle(make_example1(), dir / "example1.json");
        save_bundle(make_example2(), dir / "example2.json");
        for (int n = 1; n <= 3; ++n) {
            GroupBundle b = make_pauli_bundle(n);
            save_bundle(b, dir / (b.name + ".json"));
        }
    } catch (const std::exception& e) {
        std::cerr << "fixture generation failed: " << e.what() << "\n";
        return 1;
    }
    std::cout << "wrote 5 fixtures to " << dir.string() << "\n";
    return 0;
}
