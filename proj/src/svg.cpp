#include "rectplan/svg.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "rectplan/error.hpp"

namespace rectplan {

namespace {

// Rendering is the one place values leave exact arithmetic; doubles are fine
// for pixels.
double approx(const Rational& q) { return q.get_d(); }

const char* kPalette[] = {"#4363d8", "#e6194b", "#3cb44b", "#f58231",
                          "#911eb4", "#46f0f0", "#808000", "#000075"};

struct View {
    double xmin, ymin, xmax, ymax;
    double scale;

    double X(double x) const { return (x - xmin) * scale + 20; }
    double Y(double y) const { return (ymax - y) * scale + 20; }  // flip y
    double W(double w) const { return w * scale; }
};

void rect_tag(std::ostream& os, const View& v, const Rect& r, const std::string& attrs) {
    os << "  <rect x=\"" << v.X(approx(r.left())) << "\" y=\"" << v.Y(approx(r.top()))
       << "\" width=\"" << v.W(approx(r.w)) << "\" height=\"" << v.W(approx(r.h)) << "\" "
       << attrs << "/>\n";
}

void polygon_tag(std::ostream& os, const View& v, const ConvexPolygon& poly,
                 const std::string& attrs) {
    os << "  <polygon points=\"";
    for (const Vec2& p : poly.vertices)
        os << v.X(approx(p.x)) << "," << v.Y(approx(p.y)) << " ";
    os << "\" " << attrs << "/>\n";
}

}  // namespace

size_t render_schedule_svg(const Instance& inst, const Schedule& s, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    // Bounds over everything that will ever be drawn.
    std::vector<Rect> pos = inst.start_rects();
    double xmin = 1e300, ymin = 1e300, xmax = -1e300, ymax = -1e300;
    auto grow = [&](const Rect& r) {
        xmin = std::min(xmin, approx(r.left()));
        xmax = std::max(xmax, approx(r.right()));
        ymin = std::min(ymin, approx(r.bottom()));
        ymax = std::max(ymax, approx(r.top()));
    };
    for (const RobotSpec& r : inst.robots) {
        grow(r.start);
        grow(r.goal);
    }
    if (inst.box) grow(*inst.box);
    {
        std::vector<Rect> sim = pos;
        for (const auto& step : s.steps)
            for (const Move& m : step) {
                sim[m.robot] = translate(sim[m.robot], m.dir * m.amp);
                grow(sim[m.robot]);
            }
    }
    double span = std::max(xmax - xmin, ymax - ymin);
    if (span <= 0) span = 1;
    View view{xmin, ymin, xmax, ymax, 560.0 / span};
    double width = view.W(xmax - xmin) + 40, height = view.W(ymax - ymin) + 40;

    for (size_t si = 0; si < s.steps.size(); ++si) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(2);
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
           << "\" height=\"" << height << "\">\n";
        os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
           << "\" fill=\"white\"/>\n";
        if (inst.box)
            rect_tag(os, view, *inst.box, "fill=\"none\" stroke=\"#222\" stroke-width=\"2\"");
        for (size_t r = 0; r < inst.k(); ++r) {
            std::string color = kPalette[r % 8];
            rect_tag(os, view, inst.robots[r].goal,
                     "fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1\" "
                     "stroke-dasharray=\"4 3\" opacity=\"0.7\"");
        }
        for (const Move& m : s.steps[si]) {
            std::string color = kPalette[m.robot % 8];
            polygon_tag(os, view, trace_polygon(pos[m.robot], m.dir * m.amp),
                        "fill=\"" + color + "\" opacity=\"0.2\" stroke=\"none\"");
        }
        for (size_t r = 0; r < inst.k(); ++r) {
            std::string color = kPalette[r % 8];
            rect_tag(os, view, pos[r],
                     "fill=\"" + color + "\" opacity=\"0.8\" stroke=\"#222\" stroke-width=\"1\"");
            os << "  <text x=\"" << view.X(approx(pos[r].cx)) << "\" y=\""
               << view.Y(approx(pos[r].cy)) + 4
               << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"white\">" << r + 1
               << "</text>\n";
        }
        os << "</svg>\n";

        std::ostringstream name;
        name << "step_" << std::setw(3) << std::setfill('0') << si + 1 << ".svg";
        std::ofstream out(fs::path(out_dir) / name.str());
        if (!out) fail("IoError", "cannot write " + (fs::path(out_dir) / name.str()).string());
        out << os.str();

        for (const Move& m : s.steps[si]) pos[m.robot] = translate(pos[m.robot], m.dir * m.amp);
    }
    return s.steps.size();
}

}  // namespace rectplan
