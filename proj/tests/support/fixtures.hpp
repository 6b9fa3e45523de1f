#pragma once

// Access to the instance fixtures and their manifest. Paths come from the
// G2MAPS_FIXTURE_DIR and G2MAPS_GOLDEN_DIR compile definitions.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2maps::testing {

/// One manifest line: expected exit code, outcome and witness text, and either
/// a "disjunct/predicate=false" trace entry or the validation JSON pointer.
struct ManifestRow {
    std::string name;
    int exit;
    std::string outcome, witness, check;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::string fixture_path(const std::string& name) {
    return std::string(G2MAPS_FIXTURE_DIR) + "/instances/" + name + ".json";
}

inline std::string golden_text(const std::string& name) {
    return read_file(std::string(G2MAPS_GOLDEN_DIR) + "/" + name);
}

inline std::vector<ManifestRow> manifest() {
    std::istringstream in(read_file(std::string(G2MAPS_FIXTURE_DIR) + "/instances/expected.tsv"));
    std::vector<ManifestRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream s(line);
        ManifestRow r;
        std::string code;
        std::getline(s, r.name, '\t');
        std::getline(s, code, '\t');
        std::getline(s, r.outcome, '\t');
        std::getline(s, r.witness, '\t');
        std::getline(s, r.check, '\t');
        r.exit = std::stoi(code);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace g2maps::testing
