#include "halg/io.hpp"

#include "halg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace halg {

namespace {

struct Tok {
    std::string text;
    std::size_t col;
};

struct Line {
    std::size_t no;
    std::vector<Tok> toks;
};

std::vector<Line> lex(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        Line l{no, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i >= raw.size()) break;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            l.toks.push_back({raw.substr(i, j - i), i + 1});
            i = j;
        }
        if (!l.toks.empty()) out.push_back(std::move(l));
    }
    return out;
}

[[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& msg) {
    std::size_t col = tok < l.toks.size() ? l.toks[tok].col : (l.toks.empty() ? 1 : l.toks.back().col + l.toks.back().text.size());
    throw ParseError(msg, l.no, col);
}

Scalar parse_scalar(const Line& l, std::size_t tok, const std::string& text) {
    try {
        return Scalar::parse(text);
    } catch (const std::exception&) {
        fail(l, tok, "bad number '" + text + "'");
    }
}

using Names = std::vector<std::string>;

std::size_t lookup(const Line& l, std::size_t tok, const Names& names, const std::string& name, const std::string& what) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    fail(l, tok, "unknown basis element '" + name + "' of " + what);
}

// Linear combination over a plain tensor product of the given bases, tokens from `from` to the end of the line.
Vec parse_lin(const Line& l, std::size_t from, const std::vector<const Names*>& legs, const std::vector<std::string>& what) {
    std::vector<std::size_t> dims;
    for (const Names* n : legs) dims.push_back(n->size());
    Vec v(plain_dim(dims));
    if (from >= l.toks.size()) fail(l, from, "expected a linear combination");
    Scalar sign(1);
    bool need_op = false;
    for (std::size_t k = from; k < l.toks.size(); ++k) {
        std::string t = l.toks[k].text;
        if (t == "+" || t == "-") {
            if (!need_op && k != from) fail(l, k, "two operators in a row");
            if (t == "-") sign = -sign;
            need_op = false;
            continue;
        }
        if (need_op) fail(l, k, "expected + or -");
        if (t.size() > 1 && t[0] == '-') {
            sign = -sign;
            t = t.substr(1);
        }
        std::vector<std::string> factors;
        for (std::size_t p = 0;;) {
            std::size_t q = t.find("(x)", p);
            factors.push_back(t.substr(p, q == std::string::npos ? std::string::npos : q - p));
            if (q == std::string::npos) break;
            p = q + 3;
        }
        if (factors.size() == 1 && legs.size() == 1 && factors[0] == "0" &&
            std::find(legs[0]->begin(), legs[0]->end(), "0") == legs[0]->end()) {
            need_op = true;
            sign = Scalar(1);
            continue;
        }
        if (factors.size() != legs.size())
            fail(l, k, "expected " + std::to_string(legs.size()) + " tensor factor(s), got " + std::to_string(factors.size()));
        Scalar c = sign;
        std::size_t idx = 0;
        for (std::size_t f = 0; f < factors.size(); ++f) {
            std::string name = factors[f];
            if (auto star = name.find('*'); star != std::string::npos) {
                c *= parse_scalar(l, k, name.substr(0, star));
                name = name.substr(star + 1);
            }
            idx = idx * dims[f] + lookup(l, k, *legs[f], name, what[f]);
        }
        v[idx] += c;
        sign = Scalar(1);
        need_op = true;
    }
    if (!need_op) fail(l, l.toks.size(), "dangling operator");
    return v;
}

void expect_eq(const Line& l, std::size_t tok) {
    if (tok >= l.toks.size() || l.toks[tok].text != "=") fail(l, tok, "expected '='");
}

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

unsigned long parse_field_line(const Line& l) {
    if (l.toks[0].text == "rational" && l.toks.size() == 1) return 0;
    if (l.toks[0].text == "prime" && l.toks.size() == 2) {
        unsigned long p = 0;
        try {
            p = std::stoul(l.toks[1].text);
        } catch (const std::exception&) {
            fail(l, 1, "bad prime '" + l.toks[1].text + "'");
        }
        if (!is_prime(p)) fail(l, 1, l.toks[1].text + " is not prime");
        return p;
    }
    fail(l, 0, "expected 'rational' or 'prime <p>'");
}

// Basis, unit, products, optional filtration of one algebra section.
struct AlgebraData {
    Names names;
    std::optional<Vec> unit;
    std::map<std::pair<std::size_t, std::size_t>, Vec> products;
    std::vector<int> degrees;
    int cap = -1;
    std::size_t line = 0;
};

FiniteAlgebra build_algebra(const AlgebraData& d, const std::string& what, std::size_t last_line) {
    if (d.names.empty()) throw ParseError(what + " has no basis", d.line ? d.line : last_line, 1);
    if (!d.unit) throw ParseError(what + " has no unit", d.line, 1);
    std::size_t n = d.names.size();
    std::vector<Vec> table(n * n, Vec(n));
    for (const auto& [ij, v] : d.products) table[ij.first * n + ij.second] = v;
    FiniteAlgebra A(d.names, *d.unit, table);
    if (d.cap >= 0) {
        if (d.degrees.size() != n) throw ParseError(what + ": one degree per basis element", d.line, 1);
        A.set_filtration(d.degrees, d.cap);
    }
    return A;
}

void check_name(const Line& l, std::size_t k) {
    const std::string& t = l.toks[k].text;
    if (t.find('*') != std::string::npos || t.find("(x)") != std::string::npos || t == "+" || t == "-" || t == "=" || t[0] == '-')
        fail(l, k, "'" + t + "' cannot be a basis name");
}

Names parse_basis(const Line& l) {
    Names out;
    std::set<std::string> seen;
    for (std::size_t k = 1; k < l.toks.size(); ++k) {
        check_name(l, k);
        if (!seen.insert(l.toks[k].text).second) fail(l, k, "duplicate basis name '" + l.toks[k].text + "'");
        out.push_back(l.toks[k].text);
    }
    if (out.empty()) fail(l, 1, "empty basis");
    return out;
}

void algebra_line(const Line& l, AlgebraData& d, const std::string& what) {
    const std::string& head = l.toks[0].text;
    if (head == "basis") {
        if (!d.names.empty()) fail(l, 0, "basis given twice");
        d.names = parse_basis(l);
        d.line = l.no;
        return;
    }
    if (d.names.empty()) fail(l, 0, "basis must come first in " + what);
    if (head == "unit") {
        d.unit = parse_lin(l, 1, {&d.names}, {what});
        return;
    }
    if (head == "degrees") {
        for (std::size_t k = 1; k < l.toks.size(); ++k) {
            try {
                d.degrees.push_back(std::stoi(l.toks[k].text));
            } catch (const std::exception&) {
                fail(l, k, "bad degree");
            }
        }
        return;
    }
    if (head == "cap") {
        if (l.toks.size() != 2) fail(l, 1, "expected 'cap <n>'");
        try {
            d.cap = std::stoi(l.toks[1].text);
        } catch (const std::exception&) {
            fail(l, 1, "bad cap");
        }
        return;
    }
    auto star = head.find('*');
    if (star == std::string::npos) fail(l, 0, "expected 'basis', 'unit', 'degrees', 'cap' or a product 'a*b = ...'");
    std::size_t i = lookup(l, 0, d.names, head.substr(0, star), what), j = lookup(l, 0, d.names, head.substr(star + 1), what);
    expect_eq(l, 1);
    if (!d.products.emplace(std::pair{i, j}, parse_lin(l, 2, {&d.names}, {what})).second) fail(l, 0, "product " + head + " given twice");
}

// "key = lin" tables indexed by a basis.
struct Table {
    std::map<std::size_t, Vec> rows;
    std::size_t line = 0;
};

void table_line(const Line& l, Table& t, const Names& keys, const std::string& key_what, const std::vector<const Names*>& legs,
                const std::vector<std::string>& what) {
    std::size_t k = lookup(l, 0, keys, l.toks[0].text, key_what);
    expect_eq(l, 1);
    if (!t.rows.emplace(k, parse_lin(l, 2, legs, what)).second) fail(l, 0, "'" + l.toks[0].text + "' given twice");
    t.line = l.no;
}

Matrix table_matrix(const Table& t, const Names& keys, std::size_t rows, const std::string& what, std::size_t at_line, bool complete) {
    Matrix m(rows, keys.size());
    for (std::size_t k = 0; k < keys.size(); ++k) {
        auto it = t.rows.find(k);
        if (it == t.rows.end()) {
            if (complete) throw ParseError("missing " + what + " of '" + keys[k] + "'", at_line, 1);
            continue;
        }
        m.set_column(k, it->second);
    }
    return m;
}

std::string format_lin(const Vec& v, const std::vector<const Names*>& legs) {
    std::vector<std::size_t> dims;
    for (const Names* n : legs) dims.push_back(n->size());
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        std::vector<std::size_t> idx(legs.size());
        std::size_t r = k;
        for (std::size_t f = legs.size(); f-- > 0;) {
            idx[f] = r % dims[f];
            r /= dims[f];
        }
        std::string term;
        for (std::size_t f = 0; f < legs.size(); ++f) term += (f ? "(x)" : "") + (*legs[f])[idx[f]];
        Scalar c = v[k];
        bool neg = c.value() < 0;
        if (neg) c = -c;
        if (!c.is_one()) term = c.str() + "*" + term;
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

void write_algebra(std::ostringstream& os, const FiniteAlgebra& A, const std::string& header) {
    const Names& n = A.names();
    os << "[" << header << "]\nbasis";
    for (const auto& s : n) os << " " << s;
    os << "\nunit " << format_lin(A.unit(), {&n}) << "\n";
    if (A.filtered()) {
        os << "degrees";
        for (int d : A.degrees()) os << " " << d;
        os << "\ncap " << A.cap() << "\n";
    }
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            if (!A.admissible(i, j) || is_zero(A.product(i, j))) continue;
            os << n[i] << "*" << n[j] << " = " << format_lin(A.product(i, j), {&n}) << "\n";
        }
    os << "\n";
}

void write_field(std::ostringstream& os, unsigned long p) {
    os << "[field]\n" << (p == 0 ? std::string("rational") : "prime " + std::to_string(p)) << "\n\n";
}

void write_ring_data(std::ostringstream& os, const AeRing& R, const std::vector<Vec>& delta, const Matrix& counit) {
    const Names& a = R.A().names();
    const Names& u = R.U().names();
    os << "[eta]\n";
    for (std::size_t k = 0; k < a.size(); ++k) os << "s " << a[k] << " = " << format_lin(R.src(k), {&u}) << "\n";
    for (std::size_t k = 0; k < a.size(); ++k) os << "t " << a[k] << " = " << format_lin(R.tgt(k), {&u}) << "\n";
    os << "\n[coproduct]\n";
    for (std::size_t k = 0; k < u.size(); ++k) os << u[k] << " = " << format_lin(delta[k], {&u, &u}) << "\n";
    os << "\n[counit]\n";
    for (std::size_t k = 0; k < u.size(); ++k) os << u[k] << " = " << format_lin(counit.column(k), {&a}) << "\n";
}

}  // namespace

unsigned long read_characteristic(const std::string& text) {
    std::vector<Line> lines = lex(text);
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].toks[0].text == "[field]") {
            if (i + 1 >= lines.size() || lines[i + 1].toks[0].text[0] == '[') throw ParseError("empty [field] section", lines[i].no, 1);
            return parse_field_line(lines[i + 1]);
        }
    throw ParseError("missing [field] section", lines.empty() ? 1 : lines.back().no, 1);
}

InstanceFile parse_instance(const std::string& text) {
    std::vector<Line> lines = lex(text);
    if (lines.empty()) throw ParseError("empty document", 1, 1);
    const Line& first = lines[0];
    if (first.toks[0].text != "halg") throw ParseError("expected header 'halg 1'", first.no, first.toks[0].col);
    if (first.toks.size() != 2 || first.toks[1].text != "1") fail(first, 1, "unsupported format version");

    InstanceFile out;
    std::string name = "U", inst_name;
    std::optional<unsigned long> field;
    AlgebraData A, U;
    Table s, t, coproduct, counit, antipode, partial;
    std::map<std::string, Vec> functionals;
    std::size_t functionals_line = 0;
    std::string section;
    std::size_t last = lines.back().no;

    struct Block {
        bool comodule;
        std::string name;
        bool right;
        Names basis;
        std::map<std::pair<std::size_t, std::size_t>, Vec> act;
        std::map<std::size_t, Vec> coact;
        std::size_t line;
    };
    std::vector<Block> blocks;

    auto need_ring = [&](const Line& l) {
        if (U.names.empty()) fail(l, 0, "section needs [algebra A] and [ring ...] first");
    };

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        const std::string& head = l.toks[0].text;
        if (head[0] == '[') {
            std::string joined;
            for (const auto& tk : l.toks) joined += (joined.empty() ? "" : " ") + tk.text;
            if (joined.back() != ']') fail(l, 0, "unterminated section header");
            std::string inner = joined.substr(1, joined.size() - 2);
            std::istringstream parts(inner);
            std::vector<std::string> w;
            for (std::string x; parts >> x;) w.push_back(x);
            if (w.empty()) fail(l, 0, "empty section header");
            if (w[0] == "field" || w[0] == "eta" || w[0] == "coproduct" || w[0] == "counit" || w[0] == "antipode" || w[0] == "partial" ||
                w[0] == "functionals") {
                if (w.size() != 1) fail(l, 0, "unexpected words in [" + w[0] + "]");
                section = w[0];
            } else if (w[0] == "algebra" && w.size() == 2) {
                section = "algebra";
            } else if (w[0] == "ring" && w.size() == 2) {
                section = "ring";
                name = w[1];
            } else if ((w[0] == "comodule" || w[0] == "module") && w.size() == 3 && (w[2] == "left" || w[2] == "right")) {
                need_ring(l);
                section = w[0];
                blocks.push_back({w[0] == "comodule", w[1], w[2] == "right", {}, {}, {}, l.no});
            } else {
                fail(l, 0, "unknown section [" + inner + "]");
            }
            if (section != "field" && !field) fail(l, 0, "[field] must come first");
            if (section == "ring" && A.names.empty()) fail(l, 0, "[algebra A] must come before the ring");
            if (section != "field" && section != "algebra" && section != "ring") need_ring(l);
            continue;
        }
        if (section.empty()) {
            if (head == "name" && l.toks.size() == 2)
                inst_name = l.toks[1].text;
            else if (head == "suite" && l.toks.size() == 2)
                out.suite = l.toks[1].text;
            else if (head == "kind" && l.toks.size() == 2 && (l.toks[1].text == "left" || l.toks[1].text == "right"))
                out.right_kind = l.toks[1].text == "right";
            else if (head == "dual-of" && l.toks.size() == 3 && (l.toks[2].text == "left" || l.toks[2].text == "right"))
                out.dual_of = DualDeclaration{l.toks[2].text == "left" ? DualSide::Left : DualSide::Right, l.toks[1].text, {}};
            else
                fail(l, 0, "unknown directive '" + head + "'");
            continue;
        }
        if (section == "field") {
            if (field) fail(l, 0, "field given twice");
            field = parse_field_line(l);
            if (*field != characteristic())
                fail(l, 0, "document is over characteristic " + std::to_string(*field) + " but the active field has characteristic " +
                               std::to_string(characteristic()));
        } else if (section == "algebra") {
            algebra_line(l, A, "A");
        } else if (section == "ring") {
            algebra_line(l, U, name);
        } else if (section == "eta") {
            if ((head != "s" && head != "t") || l.toks.size() < 2) fail(l, 0, "expected 's <a> = ...' or 't <a> = ...'");
            Line rest{l.no, {l.toks.begin() + 1, l.toks.end()}};
            table_line(rest, head == "s" ? s : t, A.names, "A", {&U.names}, {name});
        } else if (section == "coproduct") {
            table_line(l, coproduct, U.names, name, {&U.names, &U.names}, {name, name});
        } else if (section == "counit") {
            table_line(l, counit, U.names, name, {&A.names}, {"A"});
        } else if (section == "antipode") {
            table_line(l, antipode, U.names, name, {&U.names}, {name});
        } else if (section == "partial") {
            table_line(l, partial, U.names, name, {&A.names}, {"A"});
        } else if (section == "functionals") {
            std::size_t f = lookup(l, 0, U.names, head, name);
            if (l.toks.size() < 2 || l.toks[1].text != ":") fail(l, 1, "expected ':'");
            Vec v;
            for (std::size_t k = 2; k < l.toks.size(); ++k) v.push_back(parse_scalar(l, k, l.toks[k].text));
            if (!functionals.emplace(U.names[f], v).second) fail(l, 0, "functional given twice");
            functionals_line = l.no;
        } else {
            Block& b = blocks.back();
            if (head == "basis") {
                if (!b.basis.empty()) fail(l, 0, "basis given twice");
                b.basis = parse_basis(l);
            } else if (b.basis.empty()) {
                fail(l, 0, "basis must come first in a " + section + " block");
            } else if (head == "act") {
                // act <m> <a> = ... (comodules: a in A), act <m> <u> = ... (modules: u in the ring)
                if (l.toks.size() < 4) fail(l, 1, "expected 'act <element> <acting> = ...'");
                std::size_t m = lookup(l, 1, b.basis, l.toks[1].text, b.name);
                std::size_t a = b.comodule ? lookup(l, 2, A.names, l.toks[2].text, "A") : lookup(l, 2, U.names, l.toks[2].text, name);
                expect_eq(l, 3);
                if (!b.act.emplace(std::pair{m, a}, parse_lin(l, 4, {&b.basis}, {b.name})).second) fail(l, 0, "action given twice");
            } else if (head == "coact" && b.comodule) {
                if (l.toks.size() < 3) fail(l, 1, "expected 'coact <element> = ...'");
                std::size_t m = lookup(l, 1, b.basis, l.toks[1].text, b.name);
                expect_eq(l, 2);
                Vec v = b.right ? parse_lin(l, 3, {&b.basis, &U.names}, {b.name, name}) : parse_lin(l, 3, {&U.names, &b.basis}, {name, b.name});
                if (!b.coact.emplace(m, v).second) fail(l, 0, "coaction given twice");
            } else {
                fail(l, 0, "unexpected '" + head + "' in a " + section + " block");
            }
        }
    }
    if (!field) throw ParseError("missing [field] section", last, 1);
    out.characteristic = *field;
    FiniteAlgebra Aalg = build_algebra(A, "[algebra A]", last);
    FiniteAlgebra Ualg = build_algebra(U, "[ring " + name + "]", last);
    Matrix sm = table_matrix(s, A.names, U.names.size(), "source", last, true);
    Matrix tm = table_matrix(t, A.names, U.names.size(), "target", last, true);
    std::vector<Vec> delta;
    for (std::size_t k = 0; k < U.names.size(); ++k) {
        auto it = coproduct.rows.find(k);
        if (it == coproduct.rows.end()) throw ParseError("missing coproduct of '" + U.names[k] + "'", last, 1);
        delta.push_back(it->second);
    }
    Matrix eps = table_matrix(counit, U.names, A.names.size(), "counit", last, true);
    AeRing R(Aalg, Ualg, sm, tm, name);
    out.instance.name = inst_name.empty() ? name : inst_name;
    out.instance.characteristic = *field;
    if (out.right_kind) {
        out.right = RightBialgebroid{R, delta, eps, name};
        out.instance.B = mirror_to_left(*out.right);
    } else {
        out.instance.B = LeftBialgebroid{R, delta, eps, name};
    }
    if (!antipode.rows.empty()) out.instance.antipode = table_matrix(antipode, U.names, U.names.size(), "antipode", antipode.line, true);
    if (!partial.rows.empty()) out.instance.partial = table_matrix(partial, U.names, A.names.size(), "right counit", partial.line, true);
    if (out.dual_of) {
        if (!out.right_kind) throw ParseError("dual-of needs 'kind right'", last, 1);
        for (const auto& n : U.names) {
            auto it = functionals.find(n);
            if (it == functionals.end()) throw ParseError("missing functional '" + n + "'", functionals_line ? functionals_line : last, 1);
            out.dual_of->functionals.push_back(it->second);
        }
    } else if (!functionals.empty()) {
        throw ParseError("[functionals] without dual-of", functionals_line, 1);
    }
    for (const Block& b : blocks) {
        std::size_t d = b.basis.size();
        if (b.comodule) {
            Comodule c;
            c.side = b.right ? ComoduleSide::Right : ComoduleSide::Left;
            c.name = b.name;
            c.names = b.basis;
            c.action.assign(A.names.size(), Matrix(d, d));
            for (const auto& [ma, v] : b.act) c.action[ma.second].set_column(ma.first, v);
            for (std::size_t m = 0; m < d; ++m) {
                auto it = b.coact.find(m);
                if (it == b.coact.end()) throw ParseError("missing coaction of '" + b.basis[m] + "' in comodule " + b.name, b.line, 1);
                c.coaction.push_back(it->second);
            }
            out.comodules.push_back(std::move(c));
        } else {
            UModule m;
            m.side = b.right ? ModuleSide::Right : ModuleSide::Left;
            m.name = b.name;
            m.names = b.basis;
            m.action.assign(U.names.size(), Matrix(d, d));
            for (const auto& [mu, v] : b.act) m.action[mu.second].set_column(mu.first, v);
            out.modules.push_back(std::move(m));
        }
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string write_instance(const Instance& inst, const std::string& suite) {
    const LeftBialgebroid& b = inst.B;
    std::ostringstream os;
    os << "halg 1\nname " << inst.name << "\nsuite " << suite << "\nkind left\n\n";
    write_field(os, inst.characteristic);
    write_algebra(os, b.A(), "algebra A");
    write_algebra(os, b.U(), "ring " + b.name);
    write_ring_data(os, b.R, b.delta, b.eps);
    const Names& u = b.U().names();
    const Names& a = b.A().names();
    if (inst.antipode) {
        os << "\n[antipode]\n";
        for (std::size_t k = 0; k < u.size(); ++k) os << u[k] << " = " << format_lin(inst.antipode->column(k), {&u}) << "\n";
    }
    if (inst.partial) {
        os << "\n[partial]\n";
        for (std::size_t k = 0; k < u.size(); ++k) os << u[k] << " = " << format_lin(inst.partial->column(k), {&a}) << "\n";
    }
    return os.str();
}

std::string write_dual(const DualBialgebroid& d, unsigned long p, const std::string& source_path,
                       const std::string& suite) {
    if (!d.has_coproduct) throw Error("the dual has no coproduct: " + d.note);
    std::ostringstream os;
    const std::string& name = d.R.name;
    os << "halg 1\nname " << name << "\nsuite " << suite << "\nkind right\ndual-of " << source_path << " "
       << (d.side == DualSide::Left ? "left" : "right") << "\n\n";
    write_field(os, p);
    write_algebra(os, d.R.A(), "algebra A");
    write_algebra(os, d.R.V(), "ring " + name);
    write_ring_data(os, d.R.R, d.R.delta, d.R.partial);
    os << "\n[functionals]\n";
    for (std::size_t j = 0; j < d.dim(); ++j) {
        os << d.R.V().name(j) << " :";
        for (const Scalar& c : d.functionals[j]) os << " " << c.str();
        os << "\n";
    }
    return os.str();
}

DualBialgebroid declared_dual(const RightBialgebroid& r, const DualDeclaration& decl, bool filtered) {
    DualBialgebroid d;
    d.side = decl.side;
    d.functionals = decl.functionals;
    if (d.functionals.empty()) throw Error("dual without functionals");
    std::size_t flat = d.functionals[0].size();
    for (const Vec& f : d.functionals)
        if (f.size() != flat) throw DimensionMismatch("functionals of different lengths");
    d.solver = std::make_shared<LinearSolver>(Matrix::from_columns(flat, d.functionals));
    d.R = r;
    d.has_coproduct = !r.delta.empty();
    d.degreewise = filtered;
    return d;
}

}  // namespace halg
