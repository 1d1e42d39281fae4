#include <sstream>

#include "geometry.hpp"

namespace burling {

namespace {

// px = 10 * units, rendered with three fixed decimals for byte-stable output
std::string px(const Rat& units) {
    using boost::multiprecision::cpp_int;
    Rat v = units * 10 * 1000;
    cpp_int n = numerator(v), d = denominator(v);
    bool neg = n < 0;
    if (neg) n = -n;
    cpp_int q = (2 * n + d) / (2 * d);  // round half up
    cpp_int ip = q / 1000, fp = q % 1000;
    std::ostringstream os;
    if (neg && (ip != 0 || fp != 0)) os << '-';
    os << ip << '.';
    std::string f = fp.str();
    os << std::string(3 - f.size(), '0') << f;
    return os.str();
}

}  // namespace

std::string scene_to_svg(const Scene& scene, const std::set<std::string>& violating) {
    Rat xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    auto grow = [&](const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2) {
        if (first) {
            xmin = x1;
            xmax = x2;
            ymin = y1;
            ymax = y2;
            first = false;
        } else {
            xmin = std::min(xmin, x1);
            xmax = std::max(xmax, x2);
            ymin = std::min(ymin, y1);
            ymax = std::max(ymax, y2);
        }
    };
    for (const auto& f : scene.frames) grow(f.x1, f.y1, f.x2, f.y2);
    for (const auto& s : scene.segments) grow(s.x1, s.y1, s.x2, s.y2);
    for (const auto& b : scene.boxes) grow(b.x1, b.y1, b.x2, b.y2);
    Rat pad = 1;
    xmin -= pad;
    ymin -= pad;
    xmax += pad;
    ymax += pad;

    auto X = [&](const Rat& x) { return px(x - xmin); };
    auto Y = [&](const Rat& y) { return px(ymax - y); };  // svg y grows downward
    auto color = [&](const std::string& id) {
        return violating.count(id) ? std::string("red") : std::string("black");
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(xmax - xmin)
       << "\" height=\"" << px(ymax - ymin) << "\" viewBox=\"0 0 " << px(xmax - xmin) << " "
       << px(ymax - ymin) << "\">\n";
    for (const auto& f : scene.frames)
        os << "  <rect x=\"" << X(f.x1) << "\" y=\"" << Y(f.y2) << "\" width=\""
           << px(f.x2 - f.x1) << "\" height=\"" << px(f.y2 - f.y1)
           << "\" fill=\"none\" stroke=\"" << color(f.id) << "\" stroke-width=\"1\"><title>"
           << f.id << "</title></rect>\n";
    for (const auto& s : scene.segments)
        os << "  <line x1=\"" << X(s.x1) << "\" y1=\"" << Y(s.y1) << "\" x2=\"" << X(s.x2)
           << "\" y2=\"" << Y(s.y2) << "\" stroke=\"" << color(s.id)
           << "\" stroke-width=\"1\"><title>" << s.id << "</title></line>\n";
    for (const auto& b : scene.boxes)
        os << "  <rect x=\"" << X(b.x1) << "\" y=\"" << Y(b.y2) << "\" width=\""
           << px(b.x2 - b.x1) << "\" height=\"" << px(b.y2 - b.y1)
           << "\" fill=\"none\" stroke=\"" << color(b.id) << "\" stroke-dasharray=\"4 2\""
           << " stroke-width=\"1\"><title>" << b.id << " z=[" << rat_str(b.z1) << ","
           << rat_str(b.z2) << "]</title></rect>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace burling
