#include "pep/pepsystem.hpp"

#include <algorithm>
#include <map>

namespace pep {

bool ExponentVector::operator<(const ExponentVector& o) const {
    if (n.size() != o.n.size()) return n.size() < o.n.size();
    for (size_t i = 0; i < n.size(); ++i) {
        if (n[i] != o.n[i]) return n[i] < o.n[i];
    }
    return false;
}

std::string ExponentVector::str() const {
    std::string s = "(";
    for (size_t i = 0; i < n.size(); ++i) {
        if (i) s += ",";
        s += n[i].get_str();
    }
    return s + ")";
}

void PepSystem::validate() const {
    if (!field) throw MathError("pep system without a field");
    if (components.empty()) throw MathError("pep system needs at least one component");
    for (const auto& b : bases)
        if (b.is_zero()) throw MathError("pep bases must be nonzero");
    for (const auto& comp : components)
        for (const auto& t : comp.terms) {
            if (t.coeff.is_zero()) throw MathError("pep coefficients must be nonzero");
            if (t.exponents.rows != bases.size() || t.exponents.cols != r)
                throw DimensionMismatchError("pep exponent matrix shape mismatch");
        }
}

namespace {

std::vector<Int> form_values(const IntMat& exps, const ExponentVector& n) {
    std::vector<Int> v(exps.rows, Int(0));
    for (size_t j = 0; j < exps.rows; ++j)
        for (size_t i = 0; i < exps.cols; ++i) v[j] += exps.at(j, i) * n.n[i];
    return v;
}

}  // namespace

std::vector<FieldElement> evaluate(const PepSystem& f, const ExponentVector& n) {
    if (n.size() != f.r) throw DimensionMismatchError("exponent vector length != variable count");
    std::vector<FieldElement> out;
    out.reserve(f.s());
    for (const auto& comp : f.components) {
        FieldElement acc = f.field->zero();
        for (const auto& t : comp.terms) {
            FieldElement v = t.coeff;
            std::vector<Int> e = form_values(t.exponents, n);
            for (size_t j = 0; j < f.bases.size(); ++j) {
                if (e[j] == 0) continue;
                v = v * f.bases[j].pow(e[j]);
            }
            acc = acc + v;
        }
        out.push_back(acc);
    }
    return out;
}

std::vector<FieldElement> term_monomials(const PepSystem& f, size_t component, const ExponentVector& n) {
    if (component >= f.s()) throw DimensionMismatchError("component index out of range");
    if (n.size() != f.r) throw DimensionMismatchError("exponent vector length != variable count");
    std::vector<FieldElement> out;
    for (const auto& t : f.components[component].terms) {
        FieldElement v = f.field->one();
        std::vector<Int> e = form_values(t.exponents, n);
        for (size_t j = 0; j < f.bases.size(); ++j) {
            if (e[j] == 0) continue;
            v = v * f.bases[j].pow(e[j]);
        }
        out.push_back(v);
    }
    return out;
}

PepSystem union_systems(const PepSystem& a, const PepSystem& b) {
    a.validate();
    b.validate();
    if (a.field.get() != b.field.get() && !a.field->same_field(*b.field))
        throw FieldMismatchError("union of systems over different fields");
    if (a.s() != b.s()) throw DimensionMismatchError("union of systems with different component counts");
    PepSystem u;
    u.field = a.field;
    u.r = a.r + b.r + 1;  // trailing selector variable
    u.bases = a.bases;
    size_t kb_off = a.bases.size();
    for (const auto& x : b.bases) u.bases.push_back(x);
    FieldElement minus_one = u.field->from_rat(Rat(-1));
    size_t sel_row = u.bases.size();
    u.bases.push_back(minus_one);  // selector base
    FieldElement half = u.field->from_rat(Rat(1, 2));

    auto lift = [&](const PepTerm& t, bool from_b, bool plus_class) {
        // (1 +- (-1)^t)/2 * term: two terms each
        std::vector<PepTerm> out;
        for (int with_sign : {0, 1}) {
            PepTerm nt;
            nt.coeff = t.coeff * half;
            if (with_sign && !plus_class) nt.coeff = -nt.coeff;
            nt.exponents = IntMat(u.bases.size(), u.r);
            for (size_t j = 0; j < t.exponents.rows; ++j)
                for (size_t i = 0; i < t.exponents.cols; ++i) {
                    size_t row = from_b ? kb_off + j : j;
                    size_t col = from_b ? a.r + i : i;
                    nt.exponents.at(row, col) = t.exponents.at(j, i);
                }
            if (with_sign) nt.exponents.at(sel_row, u.r - 1) = 1;
            out.push_back(std::move(nt));
        }
        return out;
    };

    for (size_t c = 0; c < a.s(); ++c) {
        PepComponent comp;
        for (const auto& t : a.components[c].terms)
            for (auto& nt : lift(t, false, true)) comp.terms.push_back(std::move(nt));
        for (const auto& t : b.components[c].terms)
            for (auto& nt : lift(t, true, false)) comp.terms.push_back(std::move(nt));
        u.components.push_back(std::move(comp));
    }
    u.validate();
    return u;
}

PepSystem collect_terms(const PepSystem& f) {
    PepSystem g;
    g.field = f.field;
    g.r = f.r;
    g.bases = f.bases;
    for (const auto& comp : f.components) {
        std::map<std::string, PepTerm> acc;
        for (const auto& t : comp.terms) {
            std::string key;
            for (size_t j = 0; j < t.exponents.rows; ++j)
                for (size_t i = 0; i < t.exponents.cols; ++i)
                    key += t.exponents.at(j, i).get_str() + ",";
            auto it = acc.find(key);
            if (it == acc.end()) acc.emplace(key, t);
            else it->second.coeff = it->second.coeff + t.coeff;
        }
        PepComponent out;
        for (auto& [k, t] : acc)
            if (!t.coeff.is_zero()) out.terms.push_back(std::move(t));
        g.components.push_back(std::move(out));
    }
    return g;
}

std::string value_key(const std::vector<FieldElement>& tuple) {
    std::string s;
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ";";
        s += tuple[i].key();
    }
    return s;
}

std::string PepSystem::str(const std::string& symbol, const std::vector<std::string>& vars) const {
    std::string out;
    for (const auto& comp : components) {
        std::string line;
        for (size_t ti = 0; ti < comp.terms.size(); ++ti) {
            const auto& t = comp.terms[ti];
            if (ti) line += " + ";
            line += "(" + t.coeff.str(symbol) + ")";
            for (size_t j = 0; j < bases.size(); ++j) {
                std::string form;
                for (size_t i = 0; i < r; ++i) {
                    const Int& c = t.exponents.at(j, i);
                    if (c == 0) continue;
                    std::string piece;
                    if (c == 1) piece = vars[i];
                    else if (c == -1) piece = "-" + vars[i];
                    else piece = c.get_str() + "*" + vars[i];
                    if (form.empty()) form = piece;
                    else form += (c > 0 ? "+" : "") + piece;
                }
                if (form.empty()) continue;
                line += " * (" + bases[j].str(symbol) + ")^(" + form + ")";
            }
        }
        if (comp.terms.empty()) line = "0";
        out += line + "\n";
    }
    return out;
}

std::string PepSystem::default_str() const {
    std::vector<std::string> vars;
    for (size_t i = 0; i < r; ++i) vars.push_back("n" + std::to_string(i + 1));
    return str("s", vars);
}

}  // namespace pep
