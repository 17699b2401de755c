#include "akfock/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace akfock {

namespace {

std::vector<int> int_array(const Json& j, const std::string& what) {
    if (!j.is_array()) throw std::invalid_argument(what + " must be a list of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument(what + " must contain only integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Partition partition_from_list(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("partition parts must be non-negative");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    return Partition(parts);
}

// Counts code points, so "∅" takes one column.
std::size_t display_width(const std::string& s) {
    std::size_t cols = 0;
    for (unsigned char ch : s)
        if ((ch & 0xC0) != 0x80) ++cols;
    return cols;
}

std::string pad(const std::string& s, std::size_t width) {
    const std::size_t cols = display_width(s);
    return cols >= width ? s : std::string(width - cols, ' ') + s;
}

std::string entry_text(const DecompositionMatrix& m, std::size_t r, std::size_t c, bool eval) {
    const auto& p = m.entries[r][c];
    return eval ? std::to_string(eval_at_1(p)) : to_string(p);
}

std::string latex_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        auto mag = c < 0 ? -c : c;
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (e == 0) {
            s += std::to_string(mag);
        } else {
            if (mag != 1) s += std::to_string(mag);
            s += "v";
            if (e != 1) s += "^{" + std::to_string(e) + "}";
        }
        first = false;
    }
    return s;
}

std::string latex_label(const Multipartition& m) {
    std::string s = to_string(m);
    const std::string empty = "∅";
    for (std::size_t at; (at = s.find(empty)) != std::string::npos;) s.replace(at, empty.size(), "\\varnothing");
    return s;
}

}  // namespace

Multipartition parse_multipartition(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error&) {
        throw std::invalid_argument("malformed multipartition literal: " + text);
    }
    if (!j.is_array()) throw std::invalid_argument("multipartition literal must be a JSON array: " + text);
    const bool nested = !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_array(); });
    try {
        if (!nested) return Multipartition{partition_from_list(int_array(j, "partition"))};
        std::vector<Partition> comps;
        for (const auto& c : j) comps.push_back(partition_from_list(int_array(c, "component")));
        return Multipartition(std::move(comps));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(e.what()) + " in " + text);
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer list: " + text);
        }
        while (used < item.size() && item[used] == ' ') ++used;
        if (used != item.size()) throw std::invalid_argument("not an integer list: " + text);
        out.push_back(value);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

Json to_json(const Multipartition& m) {
    Json out = Json::array();
    for (const auto& p : m.components()) out.push_back(p.parts());
    return out;
}

Json to_json(const LaurentPoly& p) {
    Json out = Json::object();
    for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c;
    return out;
}

Json to_json(const FockVector& v) {
    Json terms = Json::array();
    for (const auto& [label, c] : v.terms()) terms.push_back(Json{{"mp", to_json(label)}, {"coeff", to_json(c)}});
    return Json{{"e", v.e()}, {"charge", v.charge().entries}, {"terms", terms}};
}

Json to_json(const OperatorWord& w) {
    Json factors = Json::array();
    for (const auto& f : w.factors) factors.push_back(Json{{"residue", f.residue}, {"power", f.power}});
    return Json{{"modulus", w.modulus}, {"factors", factors}};
}

Json to_json(const AbacusDisplay& a) {
    return Json{{"e", a.e}, {"beads", a.beads}, {"positions", a.positions}};
}

Json to_json(const StripResult& s) {
    Json log = Json::array();
    for (const auto& sub : s.log) log.push_back(Json{{"nu", to_json(sub.nu)}, {"alpha", to_json(sub.alpha)}});
    return Json{{"mu", to_json(s.g.mu)},
                {"vector", to_json(s.g.vector)},
                {"subtractions", log},
                {"negative_coefficients", s.g.has_negative_coefficient}};
}

Json to_json(const RunnerReport& r) {
    Json diffs = Json::array();
    for (const auto& d : r.diffs)
        diffs.push_back(Json{{"label", to_json(d.label)}, {"lhs", to_json(d.lhs)}, {"rhs", to_json(d.rhs)}});
    Json extra = Json::array();
    for (const auto& m : r.extra_labels) extra.push_back(to_json(m));
    Json out{{"kind", r.kind == RunnerReport::Kind::FullRunner ? "full_runner" : "empty_runner"},
             {"mu", to_json(r.mu)},
             {"e", r.e()},
             {"charge", r.charge.entries},
             {"beads", r.beads}};
    if (r.kind == RunnerReport::Kind::FullRunner) out["k"] = r.k;
    out["d"] = r.d;
    out["image"] = to_json(r.image);
    out["image_charge"] = r.image_charge.entries;
    out["verdict"] = r.equal ? "equal" : "unequal";
    out["lhs"] = to_json(r.lhs);
    out["rhs"] = to_json(r.rhs);
    out["diffs"] = diffs;
    if (r.kind == RunnerReport::Kind::EmptyRunner) out["extra_labels"] = extra;
    out["summary"] = r.summary();
    return out;
}

Json to_json(const DecompositionMatrix& m, bool eval) {
    Json rows = Json::array(), cols = Json::array(), entries = Json::array();
    for (const auto& r : m.rows) rows.push_back(to_json(r));
    for (const auto& c : m.columns) cols.push_back(to_json(c));
    for (const auto& row : m.entries) {
        Json line = Json::array();
        for (const auto& p : row) {
            if (eval) line.push_back(eval_at_1(p));
            else line.push_back(to_json(p));
        }
        entries.push_back(line);
    }
    return Json{{"e", m.charge.e}, {"charge", m.charge.entries}, {"rows", rows}, {"columns", cols}, {"entries", entries}};
}

std::string format_vector_text(const FockVector& v) {
    std::size_t width = 1;
    for (const auto& [label, c] : v.terms()) width = std::max(width, display_width(to_string(c)));
    std::string out;
    for (const auto& [label, c] : v.terms()) out += pad(to_string(c), width) + "  " + to_string(label) + "\n";
    return out;
}

std::string format_matrix_text(const DecompositionMatrix& m, bool eval) {
    std::size_t label_width = 0;
    for (const auto& r : m.rows) label_width = std::max(label_width, display_width(to_string(r)));
    std::vector<std::size_t> widths;
    for (std::size_t c = 0; c < m.columns.size(); ++c) {
        std::size_t w = display_width(to_string(m.columns[c]));
        for (std::size_t r = 0; r < m.rows.size(); ++r) w = std::max(w, display_width(entry_text(m, r, c, eval)));
        widths.push_back(w);
    }
    std::string out = pad("", label_width);
    for (std::size_t c = 0; c < m.columns.size(); ++c) out += "  " + pad(to_string(m.columns[c]), widths[c]);
    out += "\n";
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        out += pad(to_string(m.rows[r]), label_width);
        for (std::size_t c = 0; c < m.columns.size(); ++c) out += "  " + pad(entry_text(m, r, c, eval), widths[c]);
        out += "\n";
    }
    return out;
}

std::string format_matrix_latex(const DecompositionMatrix& m, bool eval) {
    std::string out = "\\begin{tabular}{l|" + std::string(m.columns.size(), 'c') + "}\n";
    for (const auto& c : m.columns) out += " & $" + latex_label(c) + "$";
    out += " \\\\\n\\hline\n";
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        out += "$" + latex_label(m.rows[r]) + "$";
        for (std::size_t c = 0; c < m.columns.size(); ++c) {
            const auto& p = m.entries[r][c];
            out += " & ";
            if (eval) out += std::to_string(eval_at_1(p));
            else if (!p.is_zero()) out += "$" + latex_poly(p) + "$";
            else out += "$\\cdot$";
        }
        out += " \\\\\n";
    }
    return out + "\\end{tabular}\n";
}

std::string format_report_text(const RunnerReport& r) {
    std::string out = r.summary() + "\n";
    out += "image " + to_string(r.image) + " with multicharge ";
    for (std::size_t t = 0; t < r.image_charge.entries.size(); ++t)
        out += (t ? "," : "") + std::to_string(r.image_charge.entries[t]);
    out += " mod " + std::to_string(r.image_charge.e) + "\n";
    for (const auto& d : r.diffs)
        out += "  differs at " + to_string(d.label) + ": " + to_string(d.lhs) + " vs " + to_string(d.rhs) + "\n";
    for (const auto& m : r.extra_labels) out += "  outside the image: " + to_string(m) + "\n";
    return out;
}

}  // namespace akfock
