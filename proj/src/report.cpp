#include "balcone/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace balcone {

std::size_t display_width(const std::string &utf8) {
    return std::count_if(utf8.begin(), utf8.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    });
}

std::string format_fraction(const Rational &q) {
    static const std::map<std::pair<long, long>, const char *> vulgar = {
        {{1, 2}, "½"}, {{1, 3}, "⅓"}, {{2, 3}, "⅔"}, {{1, 4}, "¼"},
        {{3, 4}, "¾"}, {{1, 5}, "⅕"}, {{2, 5}, "⅖"}, {{3, 5}, "⅗"},
        {{4, 5}, "⅘"}, {{1, 6}, "⅙"}, {{5, 6}, "⅚"}, {{1, 7}, "⅐"},
        {{1, 8}, "⅛"}, {{3, 8}, "⅜"}, {{5, 8}, "⅝"}, {{7, 8}, "⅞"},
        {{1, 9}, "⅑"}, {{1, 10}, "⅒"}};
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        auto it = vulgar.find({q.get_num().get_si(), q.get_den().get_si()});
        if (it != vulgar.end())
            return it->second;
    }
    return to_string(q);
}

std::string format_ray(const Ray &r, const std::vector<std::string> &names) {
    Integer ax = abs(r.x()), ay = abs(r.y());
    Rational scale(ax > ay ? ax : ay);
    Rational c[2] = {Rational(r.x()) / scale, Rational(r.y()) / scale};
    // The unit coefficient leads.
    int order[2] = {0, 1};
    if (abs(c[0]) != 1)
        std::swap(order[0], order[1]);
    std::string out;
    for (int i : order) {
        if (c[i] == 0)
            continue;
        bool neg = c[i] < 0;
        if (neg)
            out += "−";
        else if (!out.empty())
            out += "+";
        Rational mag = abs(c[i]);
        if (mag != 1) {
            std::string f = format_fraction(mag);
            out += f.find('/') == std::string::npos ? f : "(" + f + ")";
        }
        out += i < static_cast<int>(names.size()) ? names[i] : "e" + std::to_string(i);
    }
    return out;
}

ordered_json rational_to_json_string(const Rational &q) { return to_string(q); }

std::vector<std::string> h11_labels(const Scenario &s) {
    std::vector<std::string> out;
    for (const auto &b : s.h11_basis)
        out.push_back(b.display());
    return out;
}

std::vector<std::string> codim_labels(const Scenario &s) {
    std::vector<std::string> out;
    for (const auto &b : s.codim_basis)
        out.push_back(b.display());
    return out;
}

ordered_json pairing_to_json(const Scenario &s, const PairingMatrix &pm) {
    ordered_json j;
    ordered_json rows = ordered_json::array(), cols = ordered_json::array();
    for (const auto &b : s.h11_basis)
        rows.push_back(b.name);
    for (const auto &b : s.codim_basis)
        cols.push_back(b.name);
    ordered_json m = ordered_json::array();
    for (std::size_t i = 0; i < pm.entries.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < pm.entries.cols(); ++k)
            row.push_back(to_string(pm.entries(i, k)));
        m.push_back(row);
    }
    j["rows"] = rows;
    j["cols"] = cols;
    j["matrix"] = m;
    j["determinant"] = to_string(pm.entries.determinant());
    j["non_degenerate"] = pm.non_degenerate();
    return j;
}

ordered_json gap_report_to_json(const GapReport &g) {
    ordered_json j;
    j["image_closure"] = cone_to_json(g.image_closure);
    j["balanced_cone"] = cone_to_json(g.balanced_cone);
    j["included"] = g.inclusion.included;
    j["strict"] = g.inclusion.strict;
    ordered_json gaps = ordered_json::array();
    for (const auto &w : g.gaps)
        gaps.push_back({{"from", ray_to_json(w.from)},
                        {"to", ray_to_json(w.to)},
                        {"witness", ray_to_json(w.witness)}});
    j["gaps"] = gaps;
    return j;
}

namespace {

bool bool_from_json(const ordered_json &j, const char *key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_boolean())
        throw DocumentError(std::string("/") + key, "expected a boolean");
    return it->get<bool>();
}

const ordered_json &field(const ordered_json &j, const std::string &key,
                          const std::string &path) {
    if (!j.is_object() || !j.contains(key))
        throw DocumentError(path + "/" + key, "missing required key");
    return j[key];
}

} // namespace

GapReport gap_report_from_json(const ordered_json &j) {
    GapReport g{cone_from_json(field(j, "image_closure", ""), "/image_closure"),
                cone_from_json(field(j, "balanced_cone", ""), "/balanced_cone"),
                {bool_from_json(j, "included"), bool_from_json(j, "strict")},
                {}};
    const auto &gaps = field(j, "gaps", "");
    if (!gaps.is_array())
        throw DocumentError("/gaps", "expected an array");
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        std::string path = "/gaps/" + std::to_string(i);
        g.gaps.push_back(
            {ray_from_json(field(gaps[i], "from", path), path + "/from"),
             ray_from_json(field(gaps[i], "to", path), path + "/to"),
             ray_from_json(field(gaps[i], "witness", path), path + "/witness")});
    }
    return g;
}

void TextTable::heading(const std::string &title) {
    lines_.push_back({true, title, ""});
}

void TextTable::row(const std::string &key, const std::string &value) {
    lines_.push_back({false, key, value});
}

std::string TextTable::str() const {
    std::size_t width = 0;
    for (const auto &l : lines_)
        if (!l.heading)
            width = std::max(width, display_width(l.key));
    std::ostringstream out;
    for (const auto &l : lines_) {
        if (l.heading) {
            if (color_)
                out << "\x1b[1m" << l.key << "\x1b[0m\n";
            else
                out << l.key << "\n";
            continue;
        }
        out << "  " << l.key << std::string(width - display_width(l.key) + 2, ' ')
            << l.value << "\n";
    }
    return out.str();
}

} // namespace balcone
