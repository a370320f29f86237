#include "twc/io.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace twc {

namespace {

struct Cursor {
    std::string text;
    size_t pos = 0;
    int line = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("parse error at line " + std::to_string(line) + ": " + msg);
    }
    void skip_ws(bool newlines = true) {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else if (c == '\n') {
                if (!newlines) return;
                ++line;
                ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                return;
            }
        }
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool try_eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!try_eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool try_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) == 0) {
            size_t end = pos + w.size();
            if (end >= text.size() || !(std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) {
                pos = end;
                return true;
            }
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected identifier");
        return text.substr(start, pos - start);
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoll(text.substr(start, pos - start));
    }
    Scalar scalar(const Field& f) {
        long long num = integer();
        if (try_eat('/')) return Scalar::of_fraction(num, integer(), f);
        return Scalar::of_int(num, f);
    }
};

HatTag parse_tag(Cursor& c, const SectionAlgebra& alg) {
    // nu^s * id * nu^-t, or a bare id for the (0,0) window
    if (c.try_word("nu")) {
        c.expect('^');
        int s = static_cast<int>(c.integer());
        c.expect('*');
        std::string id = c.ident();
        c.expect('*');
        if (!c.try_word("nu")) c.fail("expected nu^-t");
        c.expect('^');
        int mt = static_cast<int>(c.integer());
        return HatTag{alg.basis_index(id), s, -mt};
    }
    std::string id = c.ident();
    return HatTag{alg.basis_index(id), 0, 0};
}

Matrix parse_matrix(Cursor& c, const Field& f) {
    c.expect('[');
    std::vector<std::vector<Scalar>> rows;
    if (!c.try_eat(']')) {
        do {
            c.expect('[');
            std::vector<Scalar> row;
            if (!c.try_eat(']')) {
                do row.push_back(c.scalar(f));
                while (c.try_eat(','));
                c.expect(']');
            }
            rows.push_back(std::move(row));
        } while (c.try_eat(','));
        c.expect(']');
    }
    int nr = static_cast<int>(rows.size());
    int nc = nr ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(nr, nc, f);
    for (int i = 0; i < nr; ++i) {
        if (static_cast<int>(rows[i].size()) != nc) c.fail("ragged matrix literal");
        for (int j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

SModule parse_module_literal(Cursor& c, const SectionAlgebra& alg) {
    SModule m;
    c.expect('{');
    if (!c.try_eat('}')) {
        do {
            c.expect('(');
            int shift = static_cast<int>(c.integer());
            c.expect(',');
            int idem = alg.idem_index(c.ident());
            c.expect(')');
            c.expect(':');
            int d = static_cast<int>(c.integer());
            if (d < 0) c.fail("negative dimension");
            if (d > 0) m.dims[{shift, idem}] += d;
        } while (c.try_eat(','));
        c.expect('}');
    }
    return m;
}

SModule resolve_module(Cursor& c, const Workspace& ws) {
    if (c.peek() == '{') return parse_module_literal(c, ws.alg);
    std::string name = c.ident();
    auto it = ws.modules.find(name);
    if (it == ws.modules.end()) c.fail("unknown module '" + name + "'");
    return it->second;
}

AdMorphism parse_morphism_terms(Cursor& c, const SectionAlgebra& alg, const SModule& src,
                                const SModule& dst) {
    AdMorphism f(src, dst, alg.field);
    c.expect('[');
    if (!c.try_eat(']')) {
        do {
            c.expect('(');
            HatTag tag = parse_tag(c, alg);
            c.expect(',');
            Matrix m = parse_matrix(c, alg.field);
            c.expect(')');
            try {
                f.add_term(alg, tag, m);
            } catch (const Error& e) {
                c.fail(e.what());
            }
        } while (c.try_eat(','));
        c.expect(']');
    }
    return f;
}

AdMorphism resolve_morphism(Cursor& c, const Workspace& ws, const SModule& src, const SModule& dst) {
    if (c.peek() == '[') return parse_morphism_terms(c, ws.alg, src, dst);
    if (c.peek() == '0') {
        c.integer();
        return zero_morphism(ws.alg, src, dst);
    }
    std::string name = c.ident();
    auto it = ws.morphisms.find(name);
    if (it == ws.morphisms.end()) c.fail("unknown morphism '" + name + "'");
    if (!(it->second.src() == src) || !(it->second.dst() == dst))
        c.fail("morphism '" + name + "' has wrong source/target");
    return it->second;
}

}  // namespace

TwMorphism Workspace::named_twmor(const std::string& name) const {
    auto it = twmorphisms.find(name);
    if (it == twmorphisms.end()) throw Error("unknown tw-morphism '" + name + "'");
    return it->second;
}

Workspace parse_workspace(const std::string& text, const std::string& field_override) {
    Cursor c{text};
    Workspace ws;
    bool have_field = false;

    while (!c.eof()) {
        if (c.try_word("field")) {
            std::string spec;
            c.skip_ws();
            while (c.pos < c.text.size() && !std::isspace(static_cast<unsigned char>(c.text[c.pos])))
                spec += c.text[c.pos++];
            ws.alg.field = Field::parse(field_override.empty() ? spec : field_override);
            have_field = true;
        } else if (c.try_word("config")) {
            std::string key = c.ident();
            long long v = c.integer();
            if (key == "window")
                ws.config.window = static_cast<int>(v);
            else if (key == "dims")
                ws.config.dims = static_cast<int>(v);
            else if (key == "seed")
                ws.config.seed = static_cast<std::uint64_t>(v);
            else if (key == "cases")
                ws.config.cases = static_cast<int>(v);
            else
                c.fail("unknown config key '" + key + "'");
        } else if (c.try_word("idempotents")) {
            do ws.alg.idems.push_back(c.ident());
            while (c.try_eat(','));
        } else if (c.try_word("basis")) {
            c.expect('{');
            while (!c.try_eat('}')) {
                BasisElem e;
                e.name = c.ident();
                c.expect(':');
                e.src = ws.alg.idem_index(c.ident());
                c.expect('-');
                c.expect('>');
                e.dst = ws.alg.idem_index(c.ident());
                if (!c.try_word("deg")) c.fail("expected 'deg'");
                e.deg = static_cast<int>(c.integer());
                e.unit = c.try_word("unit");
                ws.alg.add_basis(e);
            }
        } else if (c.try_word("bn")) {
            if (!have_field) c.fail("field must be declared before bn");
            c.expect('{');
            while (!c.try_eat('}')) {
                long long n = c.integer();
                c.expect(':');
                c.expect('[');
                std::vector<BasisId> chain;
                do chain.push_back(ws.alg.basis_index(c.ident()));
                while (c.try_eat(','));
                c.expect(']');
                if (static_cast<long long>(chain.size()) != n) c.fail("arity does not match chain length");
                c.expect('-');
                c.expect('>');
                Element value(ws.alg.field);
                do {
                    c.skip_ws();
                    bool numeric = c.pos < c.text.size() &&
                                   (std::isdigit(static_cast<unsigned char>(c.text[c.pos])) ||
                                    c.text[c.pos] == '-' || c.text[c.pos] == '+');
                    if (numeric) {
                        Scalar coeff = c.scalar(ws.alg.field);
                        if (c.try_eat('*'))
                            value.add(ws.alg.basis_index(c.ident()), coeff);
                        else if (!coeff.is_zero())
                            c.fail("expected '*<basis>' after coefficient");
                        // a bare 0 contributes nothing
                    } else {
                        value.add(ws.alg.basis_index(c.ident()), Scalar::one(ws.alg.field));
                    }
                } while (c.try_eat('+'));
                try {
                    ws.alg.add_bn(chain, value);
                } catch (const Error& e) {
                    c.fail(e.what());
                }
            }
        } else if (c.try_word("module")) {
            std::string name = c.ident();
            SModule m = parse_module_literal(c, ws.alg);
            if (!ws.modules.emplace(name, m).second) c.fail("duplicate module '" + name + "'");
            ws.decl_order.emplace_back("module", name);
        } else if (c.try_word("morphism")) {
            std::string name = c.ident();
            c.expect('=');
            // need source/target first; scan ahead is awkward, so require the
            // declared form: morphism f = [ terms ] : SRC -> DST
            size_t terms_start = c.pos;
            int depth = 0;
            c.skip_ws();
            // find matching close bracket to locate ": SRC -> DST"
            size_t scan = c.pos;
            do {
                if (scan >= c.text.size()) c.fail("unterminated morphism literal");
                if (c.text[scan] == '[') ++depth;
                if (c.text[scan] == ']') --depth;
                ++scan;
            } while (depth > 0);
            size_t after = scan;
            Cursor tail{c.text, after, c.line};
            tail.expect(':');
            SModule src = resolve_module(tail, ws);
            tail.expect('-');
            tail.expect('>');
            SModule dst = resolve_module(tail, ws);
            Cursor body{c.text.substr(0, after), terms_start, c.line};
            AdMorphism f = parse_morphism_terms(body, ws.alg, src, dst);
            c.pos = tail.pos;
            c.line = tail.line;
            if (!ws.morphisms.emplace(name, f).second) c.fail("duplicate morphism '" + name + "'");
            ws.decl_order.emplace_back("morphism", name);
        } else if (c.try_word("tw")) {
            std::string name = c.ident();
            c.expect('{');
            if (!c.try_word("module")) c.fail("expected 'module ='");
            c.expect('=');
            SModule m = resolve_module(c, ws);
            c.expect(',');
            if (!c.try_word("delta")) c.fail("expected 'delta ='");
            c.expect('=');
            AdMorphism d = resolve_morphism(c, ws, m, m);
            c.expect('}');
            try {
                TwObject obj = validate_tw(ws.alg, m, d);
                if (!ws.objects.emplace(name, obj).second) c.fail("duplicate tw object '" + name + "'");
            } catch (const Error& e) {
                c.fail(e.what());
            }
            ws.decl_order.emplace_back("tw", name);
        } else if (c.try_word("twmor")) {
            std::string name = c.ident();
            c.expect(':');
            std::string sname = c.ident();
            c.expect('-');
            c.expect('>');
            std::string dname = c.ident();
            c.expect('=');
            auto sit = ws.objects.find(sname), dit = ws.objects.find(dname);
            if (sit == ws.objects.end() || dit == ws.objects.end()) c.fail("unknown tw object");
            AdMorphism f = resolve_morphism(c, ws, sit->second.module, dit->second.module);
            if (!ws.twmorphisms.emplace(name, TwMorphism{sit->second, dit->second, f}).second)
                c.fail("duplicate tw-morphism '" + name + "'");
            ws.twmor_ends[name] = {sname, dname};
            ws.decl_order.emplace_back("twmor", name);
        } else if (c.try_word("conflation")) {
            std::string name = c.ident();
            c.expect('{');
            if (!c.try_word("X")) c.fail("expected X");
            c.expect('=');
            std::string xn = c.ident();
            c.expect(',');
            if (!c.try_word("Y")) c.fail("expected Y");
            c.expect('=');
            std::string yn = c.ident();
            c.expect(',');
            if (!c.try_word("gamma")) c.fail("expected gamma");
            c.expect('=');
            auto xit = ws.objects.find(xn), yit = ws.objects.find(yn);
            if (xit == ws.objects.end() || yit == ws.objects.end()) c.fail("unknown tw object");
            AdMorphism g = resolve_morphism(c, ws, yit->second.module, xit->second.module);
            c.expect('}');
            try {
                Conflation xi = make_canonical(ws.alg, xit->second, yit->second, g);
                if (!ws.conflations.emplace(name, xi).second) c.fail("duplicate conflation '" + name + "'");
            } catch (const Error& e) {
                c.fail(e.what());
            }
            ws.confl_ends[name] = {xn, yn};
            ws.decl_order.emplace_back("conflation", name);
        } else {
            c.fail("unknown declaration '" + c.ident() + "'");
        }
    }
    if (!have_field) throw Error("parse error: missing field declaration");
    try {
        ws.alg.validate();
    } catch (const Error& e) {
        throw Error(std::string("load-time validation: ") + e.what());
    }
    return ws;
}

std::string matrix_str(const Matrix& m) { return m.str(); }

std::string morphism_str(const SectionAlgebra& alg, const AdMorphism& f) {
    std::string s = "[ ";
    bool first = true;
    for (const auto& [a, m] : f.terms()) {
        if (!first) s += ", ";
        first = false;
        s += "(" + hat_tag_str(alg, a) + ", " + m.str() + ")";
    }
    return s + " ]";
}

namespace {

std::string module_str(const SectionAlgebra& alg, const SModule& m) {
    std::string s = "{ ";
    bool first = true;
    for (const auto& [u, d] : m.dims) {
        if (!first) s += ", ";
        first = false;
        s += "(" + std::to_string(u.shift) + "," + alg.idems.at(u.base) + "): " + std::to_string(d);
    }
    return s + " }";
}

std::string tag_print(const SectionAlgebra& alg, const HatTag& a) {
    if (a.s == 0 && a.t == 0) return alg.basis.at(a.base).name;
    return "nu^" + std::to_string(a.s) + "*" + alg.basis.at(a.base).name + "*nu^" + std::to_string(-a.t);
}

}  // namespace

std::string print_workspace(const Workspace& ws) {
    std::ostringstream out;
    const SectionAlgebra& alg = ws.alg;
    out << "field " << alg.field.str() << "\n";
    out << "config window " << ws.config.window << "\n";
    out << "config dims " << ws.config.dims << "\n";
    out << "config seed " << ws.config.seed << "\n";
    out << "config cases " << ws.config.cases << "\n\n";
    out << "idempotents ";
    for (size_t i = 0; i < alg.idems.size(); ++i) out << (i ? ", " : "") << alg.idems[i];
    out << "\n\nbasis {\n";
    for (const auto& b : alg.basis) {
        out << "  " << b.name << " : " << alg.idems[b.src] << " -> " << alg.idems[b.dst] << " deg "
            << b.deg << (b.unit ? " unit" : "") << "\n";
    }
    out << "}\n\nbn {\n";
    for (const auto& chain : alg.table_keys()) {
        out << "  " << chain.size() << " : [";
        for (size_t i = 0; i < chain.size(); ++i) out << (i ? ", " : "") << alg.basis[chain[i]].name;
        out << "] -> ";
        const Element* e = alg.table_entry(chain);
        if (e->is_zero()) {
            out << "0";
        } else {
            bool first = true;
            for (const auto& [b, cf] : e->terms()) {
                if (!first) out << " + ";
                first = false;
                out << cf.str() << "*" << alg.basis[b].name;
            }
        }
        out << "\n";
    }
    out << "}\n";
    for (const auto& [kind, name] : ws.decl_order) {
        out << "\n";
        if (kind == "module") {
            out << "module " << name << " " << module_str(alg, ws.modules.at(name)) << "\n";
        } else if (kind == "morphism") {
            const AdMorphism& f = ws.morphisms.at(name);
            out << "morphism " << name << " = [ ";
            bool first = true;
            for (const auto& [a, m] : f.terms()) {
                if (!first) out << ", ";
                first = false;
                out << "(" << tag_print(alg, a) << ", " << m.str() << ")";
            }
            out << " ] : " << module_str(alg, f.src()) << " -> " << module_str(alg, f.dst()) << "\n";
        } else if (kind == "tw") {
            const TwObject& o = ws.objects.at(name);
            out << "tw " << name << " { module = " << module_str(alg, o.module) << ", delta = ";
            if (o.delta.is_zero()) {
                out << "0";
            } else {
                out << "[ ";
                bool first = true;
                for (const auto& [a, m] : o.delta.terms()) {
                    if (!first) out << ", ";
                    first = false;
                    out << "(" << tag_print(alg, a) << ", " << m.str() << ")";
                }
                out << " ]";
            }
            out << " }\n";
        } else if (kind == "twmor") {
            const auto& [sn, dn] = ws.twmor_ends.at(name);
            const TwMorphism& f = ws.twmorphisms.at(name);
            out << "twmor " << name << " : " << sn << " -> " << dn << " = ";
            if (f.under.is_zero()) {
                out << "0";
            } else {
                out << "[ ";
                bool first = true;
                for (const auto& [a, m] : f.under.terms()) {
                    if (!first) out << ", ";
                    first = false;
                    out << "(" << tag_print(alg, a) << ", " << m.str() << ")";
                }
                out << " ]";
            }
            out << "\n";
        } else if (kind == "conflation") {
            const auto& [xn, yn] = ws.confl_ends.at(name);
            const Conflation& xi = ws.conflations.at(name);
            out << "conflation " << name << " { X = " << xn << ", Y = " << yn << ", gamma = ";
            if (xi.gamma.is_zero()) {
                out << "0";
            } else {
                out << "[ ";
                bool first = true;
                for (const auto& [a, m] : xi.gamma.terms()) {
                    if (!first) out << ", ";
                    first = false;
                    out << "(" << tag_print(alg, a) << ", " << m.str() << ")";
                }
                out << " ]";
            }
            out << " }\n";
        }
    }
    return out.str();
}

const char* builtin_e1() {
    return R"(# E1: a single idempotent and its strict unit
field Q

idempotents i

basis {
  e_i : i -> i deg -1 unit
}

bn {
}
)";
}

const char* builtin_e2() {
    return R"(# E2: two idempotents and one degree-0 arrow; a DG-category section
field Q

idempotents i, j

basis {
  e_i : i -> i deg -1 unit
  e_j : j -> j deg -1 unit
  x : i -> j deg 0
}

bn {
}
)";
}

const char* builtin_e3() {
    return R"(# E3: one idempotent plus a, c with the single higher product b_3(a,a,a) = c
field Q

idempotents i

basis {
  e_i : i -> i deg -1 unit
  a : i -> i deg 0
  c : i -> i deg 1
}

bn {
  3 : [a, a, a] -> c
}
)";
}

}  // namespace twc
