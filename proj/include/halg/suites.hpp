#pragma once

#include "halg/io.hpp"

namespace halg {

// bialgebroid, hopf, duals, sstar, comodule, modules, gallery
const std::vector<std::string>& suite_names();

// Runs one suite (or "all", which prefixes every id with "<suite>.") on a loaded file.
// `base_dir` resolves the dual-of path of dual files. Throws Error for an unknown suite name.
Report run_suite(const InstanceFile& f, const std::string& suite, const std::string& base_dir);

// Loads a file under its own field: read, set the characteristic, parse. The returned scope must outlive every use.
struct LoadedFile {
    std::unique_ptr<FieldScope> scope;
    InstanceFile file;
    std::string dir;
};
LoadedFile load_file(const std::string& path);

}  // namespace halg
