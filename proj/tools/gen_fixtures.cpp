// Writes the fixture directory (operator and closure JSON documents) from
// the built-in catalog tables. Usage: gen_fixtures <dir>
#include <filesystem>
#include <iostream>

#include "ttw/catalog.hpp"
#include "ttw/json_io.hpp"

using namespace ttw;
using catalog::ClosureKind;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_fixtures <directory>\n";
        return 2;
    }
    std::filesystem::path root(argv[1]);
    for (unsigned k = 1; k <= 4; ++k) {
        std::filesystem::path base = root / ("k" + std::to_string(k));
        std::filesystem::create_directories(base / "closures");
        catalog::ModelParams mp{k, {}, {}, {}};
        save_diffop((base / "H.json").string(), catalog::hamiltonian(mp));
        save_diffop((base / "I1.json").string(), catalog::integral1(mp));
        save_diffop((base / "I2.json").string(), catalog::integral2(mp));
        save_diffop((base / "I12.json").string(),
                    catalog::integral12(mp, catalog::I12Source::Fixture));
        auto write_closure = [&](ClosureKind kind, const std::string& name) {
            try {
                save_genpoly((base / "closures" / (name + ".json")).string(),
                             catalog::expected_closure(k, kind));
            } catch (const catalog::NotPrintedError&) {
            }
        };
        write_closure(ClosureKind::DoubleI1, "doubleI1");
        write_closure(ClosureKind::DoubleI2, "doubleI2");
        write_closure(ClosureKind::Syzygy, "syzygy");
        write_closure(ClosureKind::SyzygyOmega0, "syzygy_omega0");
    }
    std::cout << "fixtures written to " << root.string() << "\n";
    return 0;
}
