// Regenerates the machine corpus from the builders. Run from the repository
// root; pass a different directory to write elsewhere.
#include <iostream>

#include "pdtfun/machine_io.hpp"
#include "pdtfun/witnesses.hpp"

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "machines";
    for (const auto& [file, spec] : pdtfun::machine_corpus()) {
        const std::string path = dir + "/" + file;
        pdtfun::save_machine(spec, path);
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}
