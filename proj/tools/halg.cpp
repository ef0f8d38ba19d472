#include "halg/errors.hpp"
#include "halg/sstar.hpp"
#include "halg/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace halg;
using json = nlohmann::ordered_json;

namespace {

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "skipped";
    }
}

struct Counts {
    std::size_t passed = 0, failed = 0, skipped = 0;
};

Counts count(const Report& r) {
    Counts c;
    for (const auto& it : r.items()) {
        if (it.status == Status::Pass) ++c.passed;
        if (it.status == Status::Fail) ++c.failed;
        if (it.status == Status::Skipped) ++c.skipped;
    }
    return c;
}

json report_json(const Report& r) {
    json checks = json::array();
    for (const auto& it : r.items()) {
        json c{{"id", it.id}, {"status", status_name(it.status)}, {"cases", it.cases}};
        if (!it.witness.empty()) c[it.status == Status::Skipped ? "reason" : "witness"] = it.witness;
        checks.push_back(c);
    }
    return checks;
}

void print_report(std::ostream& os, const Report& r) {
    for (const auto& it : r.items()) {
        os << "\ncheck: " << it.id << "\nstatus: " << status_name(it.status) << "\ncases: " << it.cases << "\n";
        if (!it.witness.empty()) os << (it.status == Status::Skipped ? "reason: " : "witness: ") << it.witness << "\n";
    }
}

std::vector<std::string> matrix_rows(const Matrix& m) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string line;
        for (std::size_t j = 0; j < m.cols(); ++j) line += (j ? " " : "") + m.at(i, j).str();
        rows.push_back(line);
    }
    return rows;
}

long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
}

// Shared tail of check and sstar --verify.
int emit(const std::string& instance, const std::string& suite, const Report& r, bool as_json, std::chrono::steady_clock::time_point start,
         json extra = json::object(), const std::string& text_extra = "") {
    Counts c = count(r);
    std::string result = c.failed ? "fail" : "pass";
    if (as_json) {
        json doc{{"instance", instance}, {"suite", suite}, {"result", result}};
        for (auto& [k, v] : extra.items()) doc[k] = v;
        doc["summary"] = {{"passed", c.passed}, {"failed", c.failed}, {"skipped", c.skipped}};
        doc["checks"] = report_json(r);
        doc["time_ms"] = elapsed_ms(start);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "instance: " << instance << "\nsuite: " << suite << "\nresult: " << result << "\npassed: " << c.passed
                  << "\nfailed: " << c.failed << "\nskipped: " << c.skipped << "\n"
                  << text_extra;
        print_report(std::cout, r);
        std::cout << "\ntime_ms: " << elapsed_ms(start) << "\n";
    }
    return c.failed ? 1 : 0;
}

int cmd_check(const std::string& path, const std::string& suite, bool as_json) {
    auto start = std::chrono::steady_clock::now();
    LoadedFile lf = load_file(path);
    Report r = run_suite(lf.file, suite, lf.dir);
    return emit(lf.file.instance.name, suite, r, as_json, start);
}

int cmd_dualize(const std::string& path, const std::string& side, const std::string& out) {
    LoadedFile lf = load_file(path);
    if (lf.file.right_kind) throw Error(path + ": dualize expects a left bialgebroid");
    const LeftBialgebroid& b = lf.file.instance.B;
    DualBialgebroid d = build_dual(b, side == "left" ? DualSide::Left : DualSide::Right);
    if (!d.has_coproduct) {
        std::cerr << "warning: " << d.note << "\n";
        throw Error("the dual has no coproduct to write");
    }
    namespace fs = std::filesystem;
    std::string source = path;
    if (!out.empty()) {
        fs::path dir = fs::absolute(fs::path(out)).parent_path();
        source = fs::relative(fs::absolute(path), dir).generic_string();
    }
    d.R.name = lf.file.instance.name + (side == "left" ? "_lower" : "_upper");
    std::string text = write_dual(d, lf.file.characteristic, source);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f || !(f << text)) throw Error("cannot write " + out);
        std::cout << "wrote " << out << " (" << d.dim() << "-dimensional " << side << " dual)\n";
    }
    return 0;
}

int cmd_sstar(const std::string& path, bool verify, bool as_json) {
    auto start = std::chrono::steady_clock::now();
    LoadedFile lf = load_file(path);
    if (lf.file.right_kind) throw Error(path + ": sstar expects a left bialgebroid");
    const LeftBialgebroid& b = lf.file.instance.B;
    DualBialgebroid up = build_dual(b, DualSide::Right), down = build_dual(b, DualSide::Left);
    json mats = json::object();
    std::string text;
    auto dump = [&](const std::string& key, const Matrix& m) {
        mats[key] = matrix_rows(m);
        text += key + ": " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + "\n";
        for (const std::string& row : matrix_rows(m)) text += "  " + row + "\n";
    };
    dump("sstar", compute_sstar(b, invert_galois(b, Side::Left), up, down).linear);
    try {
        dump("sstardown", compute_sstardown(b, invert_galois(b, Side::Right), down, up).linear);
    } catch (const NotInvertible& e) {
        text += "sstardown: unavailable (" + std::string(e.what()) + ")\n";
        mats["sstardown"] = nullptr;
    }
    if (!verify) {
        if (as_json) {
            std::cout << json{{"instance", lf.file.instance.name}, {"matrices", mats}}.dump(2) << "\n";
        } else {
            std::cout << "instance: " << lf.file.instance.name << "\n" << text;
        }
        return 0;
    }
    Report r = run_suite(lf.file, "sstar", lf.dir);
    return emit(lf.file.instance.name, "sstar", r, as_json, start, json{{"matrices", mats}}, text);
}

int cmd_export(const std::string& name, const std::string& suite, const std::string& out) {
    FieldScope field(gallery_characteristic(name));
    std::string text = write_instance(build_gallery_instance(name), suite);
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out);
    if (!f || !(f << text)) throw Error("cannot write " + out);
    std::cout << "wrote " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for finite Hopf algebroids"};
    app.require_subcommand(1);
    std::vector<std::string> suites{"all"};
    for (const auto& s : suite_names()) suites.push_back(s);

    std::string file, suite = "all", side, out, name, export_suite = "all";
    bool as_json = false, verify = false;

    auto* check = app.add_subcommand("check", "run a verification suite on an instance file");
    check->add_option("file", file, "instance file")->required();
    check->add_option("--suite", suite, "suite to run")->check(CLI::IsMember(suites));
    check->add_flag("--json", as_json, "JSON report");

    auto* dualize = app.add_subcommand("dualize", "write a dual as a right bialgebroid file");
    dualize->add_option("file", file, "instance file")->required();
    dualize->add_option("--side", side, "left (U_*) or right (U^*)")->required()->check(CLI::IsMember({"left", "right"}));
    dualize->add_option("--out", out, "output path (default: standard output)");

    auto* sstar = app.add_subcommand("sstar", "print the linking morphisms between the duals");
    sstar->add_option("file", file, "instance file")->required();
    sstar->add_flag("--verify", verify, "run the sstar suite as well");
    sstar->add_flag("--json", as_json, "JSON output");

    auto* exp = app.add_subcommand("export", "write a gallery instance as an instance file");
    exp->add_option("name", name, "gallery name: EX-HOPF, EX-SW, EX-GPD, EX-AE, EX-LR(N), EX-LR2(N)")->required();
    exp->add_option("--suite", export_suite, "declared suite")->check(CLI::IsMember(suites));
    exp->add_option("--out", out, "output path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check(file, suite, as_json);
        if (*dualize) return cmd_dualize(file, side, out);
        if (*sstar) return cmd_sstar(file, verify, as_json);
        return cmd_export(name, export_suite, out);
    } catch (const ParseError& e) {
        std::cerr << file << ": " << e.what() << "\n";
        return 2;
    } catch (const NotInvertible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
