#include "simptree/fixtures.hpp"

#include <filesystem>

#include "simptree/errors.hpp"
#include "simptree/json_io.hpp"

namespace simptree {

namespace {

PureComplex make(std::vector<Simplex> facets) {
    return PureComplex::from_facets(std::move(facets));
}

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> out;
        out.push_back({"fig1", make({{1, 2, 3}, {2, 3, 4}, {4, 5, 6},
                                     {7, 8, 9}, {8, 9, 10}, {7, 8, 10}})});
        out.push_back({"fig9", make({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5},
                                     {1, 2, 6}, {1, 3, 7}, {1, 4, 9}, {1, 5, 8}})});
        out.push_back({"t_a", make({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}})});
        out.push_back({"t_b", make({{1, 2, 3}, {2, 3, 4}, {2, 4, 5}})});
        out.push_back({"ce_a", make({{1, 2, 3}, {3, 4, 5}, {1, 5, 6}})});
        out.push_back({"ce_b", make({{1, 2, 3}, {2, 3, 4}, {4, 5, 6}, {1, 5, 6}})});
        return out;
    }();
    return fixtures;
}

const PureComplex& fixture(const std::string& name) {
    for (const auto& f : builtin_fixtures()) {
        if (f.name == name) return f.complex;
    }
    throw ParseError("unknown fixture " + name);
}

std::vector<std::string> write_fixtures(const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> paths;
    for (const auto& f : builtin_fixtures()) {
        const std::string path = (std::filesystem::path(dir) / (f.name + ".json")).string();
        write_json_file(path, to_json(f.complex));
        paths.push_back(path);
    }
    return paths;
}

}  // namespace simptree
