#include "bredon/table.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace bredon::table {

namespace {

std::string pair_text(const std::pair<int, int>& k) {
    return "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
}

// Draws counts on a grid with the second coordinate as rows (top = largest).
std::string grid(const std::map<std::pair<int, int>, int>& cells, const std::string& col_label,
                 const std::string& row_label, bool triangular) {
    int cols = 0;
    int rows = 0;
    int width = 1;
    for (const auto& [k, c] : cells) {
        cols = std::max(cols, k.first);
        rows = std::max(rows, k.second);
        width = std::max(width, static_cast<int>(std::to_string(c).size()));
    }
    width = std::max(width, static_cast<int>(std::to_string(cols).size()));
    std::ostringstream out;
    const int label_width = static_cast<int>(std::max(row_label.size(), std::to_string(rows).size()));
    for (int row = rows; row >= 0; --row) {
        out << std::setw(label_width) << row << " |";
        for (int col = 0; col <= cols; ++col) {
            auto it = cells.find({col, row});
            std::string cell;
            if (it != cells.end()) cell = std::to_string(it->second);
            else if (triangular && col < row) cell = " ";
            else cell = ".";
            out << ' ' << std::setw(width) << cell;
        }
        out << '\n';
    }
    out << std::string(label_width, ' ') << " +" << std::string((cols + 1) * (width + 1), '-') << ' '
        << col_label << '\n';
    out << std::setw(label_width) << row_label << "  ";
    for (int col = 0; col <= cols; ++col) out << ' ' << std::setw(width) << col;
    out << '\n';
    return out.str();
}

}  // namespace

std::string lattice(const NormalFormModule& m) {
    std::ostringstream out;
    out << "module: " << m.to_string() << '\n';
    if (!m.free().empty()) {
        std::map<std::pair<int, int>, int> cells;
        for (const auto& [k, c] : m.free()) cells[{k.p, k.q}] = c;
        out << "free ranks Rk^{p,q}\n" << grid(cells, "p", "q", true);
    }
    if (!m.antipodal().empty()) {
        std::map<std::pair<int, int>, int> cells;
        for (const auto& [k, c] : m.antipodal()) cells[{k.r, k.n}] = c;
        out << "antipodal ranks Rk_a^{r,n}\n" << grid(cells, "r", "n", false);
    }
    return out.str();
}

std::string dims(const GradedDims& d, const std::string& title) {
    std::ostringstream out;
    out << title << '\n';
    if (d.empty()) out << "  (zero)\n";
    for (const auto& [deg, c] : d.entries()) out << "  degree " << deg << ": " << c << '\n';
    out << "  total: " << d.total() << '\n';
    return out.str();
}

std::string c2_space(const C2GradedSpace& s) {
    std::ostringstream out;
    out << "singular cohomology with involution\n";
    std::set<int> degrees;
    for (const auto& [d, c] : s.trivial.entries()) degrees.insert(d);
    for (const auto& [d, c] : s.regular.entries()) degrees.insert(d);
    if (degrees.empty()) out << "  (zero)\n";
    for (int d : degrees)
        out << "  degree " << d << ": dim " << s.dim(d) << " (" << s.trivial.at(d) << " trivial, "
            << s.regular.at(d) << " regular)\n";
    out << "  total: " << s.total_dim() << '\n';
    return out.str();
}

std::string borel(const BorelModule& b) {
    std::ostringstream out;
    out << "Borel cohomology over F2[z]\n";
    if (b.free.empty() && b.torsion.empty()) out << "  (zero)\n";
    for (const auto& [p, c] : b.free) out << "  S^" << p << " F2[z] x" << c << '\n';
    for (const auto& [k, c] : b.torsion)
        out << "  S^" << k.first << " F2[z]/(z^" << k.second + 1 << ") x" << c << '\n';
    return out.str();
}

std::string smith_thom(const SmithThomReport& r) {
    std::ostringstream out;
    out << "fixed locus total:      " << r.fixed_total << '\n'
        << "group cohomology total: " << r.group_cohomology_total << '\n'
        << "singular total:         " << r.singular_total << '\n'
        << "class:                  " << to_string(r.maximality) << '\n';
    return out.str();
}

std::string pd(const PdResult& r, int n) {
    std::ostringstream out;
    out << "Poincare duality symmetry at n=" << n << ": " << (r.holds ? "holds" : "fails") << '\n';
    for (const auto& v : r.violations)
        out << "  " << (v.kind == PdViolation::Kind::Free ? "free " : "antipodal ")
            << pair_text(v.key) << " x" << v.count << " vs mirror " << pair_text(v.mirror) << " x"
            << v.mirror_count << '\n';
    return out.str();
}

std::string validation(const ValidationReport& r) {
    std::ostringstream out;
    for (const auto& c : r.checks) {
        out << (c.passed ? "[ok]   " : "[FAIL] ") << c.name << ": " << c.detail;
        if (!c.offending.empty()) {
            out << " -- offending";
            for (const auto& k : c.offending) out << ' ' << pair_text(k);
        }
        out << '\n';
    }
    out << (r.passed() ? "valid" : "invalid") << '\n';
    return out.str();
}

std::string prediction(const std::string& name, const Prediction& p) {
    std::ostringstream out;
    out << name << ": ";
    if (!p.applicable) out << "not applicable\n";
    else out << "applicable, predicts " << to_string(*p.prediction) << '\n';
    return out.str();
}

std::string catalog(const std::vector<CatalogFamily>& families) {
    std::ostringstream out;
    for (const auto& f : families) {
        out << f.name;
        for (const auto& p : f.parameters) out << ' ' << p.name << "=<int>";
        out << "  -- " << f.description << '\n';
    }
    return out.str();
}

std::string entry(const CatalogEntry& e) {
    std::ostringstream out;
    out << e.name;
    for (const auto& [k, v] : e.parameters) out << ' ' << k << '=' << v;
    out << '\n' << lattice(e.module);
    const auto& md = e.metadata;
    out << "dimension: " << md.dimension << '\n'
        << "real manifold: " << (md.is_real_manifold ? "yes" : "no") << '\n'
        << "fixed point: " << (md.has_fixed_point ? "yes" : "no") << '\n'
        << "connected: " << (md.connected ? "yes" : "no") << '\n'
        << "expected class: " << to_string(md.expected_class) << '\n';
    if (md.hodge_polynomial) out << "hodge polynomial: " << md.hodge_polynomial->to_string() << '\n';
    if (!md.notes.empty()) out << "notes: " << md.notes << '\n';
    return out.str();
}

}  // namespace bredon::table
