#pragma once

#include "halg/comodules.hpp"
#include "halg/duals.hpp"
#include "halg/gallery.hpp"
#include "halg/modules.hpp"

#include <functional>
#include <optional>
#include <string>

namespace halg {

// A dual written out as a right bialgebroid, tied to the instance it was computed from.
struct DualDeclaration {
    DualSide side = DualSide::Left;
    std::string source;              // path of the original instance file, relative to this file
    std::vector<Vec> functionals;    // flat, on the source's U
};

struct InstanceFile {
    unsigned long characteristic = 0;
    std::string suite = "all";  // suite the file is expected to pass
    bool right_kind = false;    // the ring data describe a right bialgebroid; [counit] then holds ∂
    Instance instance;          // left bialgebroid (kind left)
    std::optional<RightBialgebroid> right;  // kind right
    std::optional<DualDeclaration> dual_of;
    std::vector<Comodule> comodules;
    std::vector<UModule> modules;
};

// Reads only the [field] section (the scalars of the rest depend on it).
unsigned long read_characteristic(const std::string& text);
// Parses a `halg 1` document; the caller holds a FieldScope for its characteristic. Throws ParseError.
InstanceFile parse_instance(const std::string& text);

std::string read_text_file(const std::string& path);

// Serialization; degrees and cap are written for filtered rings.
std::string write_instance(const Instance& inst, const std::string& suite = "all");
std::string write_dual(const DualBialgebroid& d, unsigned long characteristic, const std::string& source_path,
                       const std::string& suite = "duals");

// The dual as declared in a file, rebuilt against the loaded source (coordinates through the file's functionals).
DualBialgebroid declared_dual(const RightBialgebroid& r, const DualDeclaration& decl, bool filtered);

}  // namespace halg
