#include "balcone/svg.hpp"

#include "balcone/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace balcone {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 400.0;
constexpr double kRadius = 110.0;
constexpr double kLabelRadius = 132.0;
constexpr double kInnerLabelRadius = 70.0;
constexpr double kPanelY = 200.0;
constexpr double kLeftX = 170.0;
constexpr double kRightX = 550.0;

std::string fixed(double v) {
    if (std::fabs(v) < 5e-7)
        v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Point {
    double x;
    double y;
};

// Screen point at distance r along a ray drawn from a panel centre; screen y
// grows downwards.
Point along(const Ray &ray, double cx, double r) {
    double x = ray.x().get_d();
    double y = ray.y().get_d();
    double len = std::hypot(x, y);
    return {cx + r * x / len, kPanelY - r * y / len};
}

std::string wedge(const Cone2D &c, double cx, const char *cls,
                  const char *fill) {
    Point a = along(c.r1(), cx, kRadius);
    Point b = along(c.r2(), cx, kRadius);
    // r1 -> r2 is counterclockwise and less than a half-turn: small arc,
    // sweep-flag 0 once y is flipped.
    std::ostringstream out;
    out << "  <path class=\"" << cls << "\" d=\"M " << fixed(cx) << ' '
        << fixed(kPanelY) << " L " << fixed(a.x) << ' ' << fixed(a.y) << " A "
        << fixed(kRadius) << ' ' << fixed(kRadius) << " 0 0 0 " << fixed(b.x)
        << ' ' << fixed(b.y) << " Z\" fill=\"" << fill
        << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
    return out.str();
}

std::string label(const Ray &ray, double cx, const std::string &text,
                  double r = kLabelRadius, const char *size = "14") {
    Point p = along(ray, cx, r);
    std::ostringstream out;
    out << "  <text x=\"" << fixed(p.x) << "\" y=\"" << fixed(p.y)
        << "\" font-size=\"" << size << "\" text-anchor=\"middle\">"
        << escape(text) << "</text>\n";
    return out.str();
}

std::vector<std::string> names_from(const ordered_json &report,
                                    const char *key) {
    const auto path = std::string("/labels/") + key;
    if (!report.contains("labels") || !report["labels"].is_object() ||
        !report["labels"].contains(key) || !report["labels"][key].is_array())
        throw DocumentError(path, "missing basis labels");
    std::vector<std::string> out;
    for (const auto &n : report["labels"][key]) {
        if (!n.is_string())
            throw DocumentError(path, "labels must be strings");
        out.push_back(n.get<std::string>());
    }
    return out;
}

Cone2D cone_field(const ordered_json &report, const char *key) {
    if (!report.is_object() || !report.contains(key))
        throw DocumentError(std::string("/") + key, "report lacks cone data");
    return cone_from_json(report[key], std::string("/") + key);
}

} // namespace

std::string render_svg(const ordered_json &report) {
    const Cone2D kahler = cone_field(report, "kahler_cone");
    const Cone2D image = cone_field(report, "image_closure");
    const Cone2D balanced = cone_field(report, "balanced_cone");
    const auto h11 = names_from(report, "h11");
    const auto codim = names_from(report, "codim");

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(kWidth)
        << "\" height=\"" << fixed(kHeight) << "\" viewBox=\"0 0 "
        << fixed(kWidth) << ' ' << fixed(kHeight)
        << "\" font-family=\"serif\">\n";
    out << "  <rect width=\"" << fixed(kWidth) << "\" height=\""
        << fixed(kHeight) << "\" fill=\"#ffffff\"/>\n";
    out << wedge(kahler, kLeftX, "kahler", "#cfe3f7");
    out << wedge(balanced, kRightX, "balanced", "#f7e1cf");
    out << wedge(image, kRightX, "image", "#d9936a");
    out << label(kahler.r1(), kLeftX, format_ray(kahler.r1(), h11));
    out << label(kahler.r2(), kLeftX, format_ray(kahler.r2(), h11));
    out << label(balanced.r1(), kRightX, format_ray(balanced.r1(), codim));
    out << label(balanced.r2(), kRightX, format_ray(balanced.r2(), codim));
    for (const Ray *r : {&image.r1(), &image.r2()})
        if (!balanced.has_generator(*r))
            out << label(*r, kRightX, format_ray(*r, codim), kInnerLabelRadius,
                         "12");
    const double mid = (kLeftX + kRightX) / 2;
    out << "  <line x1=\"" << fixed(mid - 40) << "\" y1=\"" << fixed(kPanelY)
        << "\" x2=\"" << fixed(mid + 40) << "\" y2=\"" << fixed(kPanelY)
        << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
    out << "  <polygon points=\"" << fixed(mid + 40) << ',' << fixed(kPanelY)
        << ' ' << fixed(mid + 32) << ',' << fixed(kPanelY - 4) << ' '
        << fixed(mid + 32) << ',' << fixed(kPanelY + 4)
        << "\" fill=\"#333333\"/>\n";
    out << "  <text x=\"" << fixed(mid) << "\" y=\"" << fixed(kPanelY - 8)
        << "\" font-size=\"14\" text-anchor=\"middle\" "
           "font-weight=\"bold\">b</text>\n";
    out << "  <text x=\"" << fixed(kLeftX) << "\" y=\"" << fixed(kHeight - 20)
        << "\" font-size=\"14\" text-anchor=\"middle\">Kähler cone</text>\n";
    out << "  <text x=\"" << fixed(kRightX) << "\" y=\"" << fixed(kHeight - 20)
        << "\" font-size=\"14\" text-anchor=\"middle\">balanced cone, image "
           "of b shaded</text>\n";
    out << "</svg>\n";
    return out.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    f << text;
    if (!f.flush())
        throw std::runtime_error("failed writing '" + path + "'");
}

} // namespace balcone
