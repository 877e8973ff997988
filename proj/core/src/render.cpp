#include "fuchsian/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fuchsian {

RenderSpec RenderSpec::from_window(std::string_view window, int width_px) {
  const auto first = window.find(':');
  const auto second = first == std::string_view::npos ? first : window.find(':', first + 1);
  if (second == std::string_view::npos || window.find(':', second + 1) != std::string_view::npos) {
    throw std::invalid_argument("window must be xmin:xmax:height, got '" + std::string(window) + "'");
  }
  RenderSpec spec;
  spec.x_min = Rational::parse(window.substr(0, first));
  spec.x_max = Rational::parse(window.substr(first + 1, second - first - 1));
  spec.height = Rational::parse(window.substr(second + 1));
  spec.width_px = width_px;
  spec.validate();
  return spec;
}

void RenderSpec::validate() const {
  if (!(x_min < x_max)) throw std::invalid_argument("degenerate window: xmin must be below xmax");
  if (height.sign() <= 0) throw std::invalid_argument("degenerate window: height must be positive");
  if (width_px <= 0) throw std::invalid_argument("image width must be positive");
}

int RenderSpec::height_px() const {
  const double ratio = (height / (x_max - x_min)).to_double();
  return std::max(1, static_cast<int>(std::lround(ratio * width_px)));
}

namespace {

class Canvas {
 public:
  explicit Canvas(const RenderSpec& spec)
      : x0_(spec.x_min.to_double()),
        scale_(spec.width_px / (spec.x_max - spec.x_min).to_double()),
        width_(spec.width_px),
        height_(spec.height_px()) {}

  double x(const Rational& re) const { return (re.to_double() - x0_) * scale_; }
  double y(const Rational& im) const { return height_ - im.to_double() * scale_; }
  double length(const Rational& r) const { return r.to_double() * scale_; }
  int width() const { return width_; }
  int height() const { return height_; }

 private:
  double x0_;
  double scale_;
  int width_;
  int height_;
};

std::string num(double value) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3f", value);
  std::string out(buf.data());
  return out == "-0.000" ? "0.000" : out;
}

std::string arc_path(const Canvas& canvas, const HalfCircle& c) {
  const std::string r = num(canvas.length(c.radius));
  return "M " + num(canvas.x(c.left())) + " " + num(canvas.y(0)) + " A " + r + " " + r + " 0 0 1 " +
         num(canvas.x(c.right())) + " " + num(canvas.y(0));
}

const char* stroke_for_length(std::size_t len) {
  static constexpr std::array<const char*, 6> palette{"#1f4e79", "#2e86c1", "#28b463", "#d68910", "#cb4335",
                                                      "#7d3c98"};
  return palette[std::min(len, palette.size()) - 1];
}

}  // namespace

std::string render_svg(const SchottkyDescription& desc, std::span<const Tile> tiles, const RenderSpec& spec) {
  spec.validate();
  const Canvas canvas(spec);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas.width() << "\" height=\""
     << canvas.height() << "\" viewBox=\"0 0 " << canvas.width() << " " << canvas.height() << "\">\n"
     << "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"" << canvas.width() << "\" height=\""
     << canvas.height() << "\" fill=\"white\"/>\n";

  // Fundamental domain: the window minus the closed insides of the circles.
  auto circles = desc.circles();
  std::sort(circles.begin(), circles.end(),
            [](const HalfCircle& a, const HalfCircle& b) { return a.left() < b.left(); });
  std::string domain = "M " + num(0) + " " + num(canvas.y(0));
  for (const HalfCircle& c : circles) {
    if (c.right() < spec.x_min || c.left() > spec.x_max) continue;
    domain += " L " + num(canvas.x(c.left())) + " " + num(canvas.y(0)) + " A " + num(canvas.length(c.radius)) + " " +
              num(canvas.length(c.radius)) + " 0 0 1 " + num(canvas.x(c.right())) + " " + num(canvas.y(0));
  }
  domain += " L " + num(canvas.width()) + " " + num(canvas.y(0)) + " L " + num(canvas.width()) + " 0 L 0 0 Z";
  os << "  <path class=\"domain\" d=\"" << domain << "\" fill=\"#eaf2f8\" stroke=\"none\"/>\n";

  os << "  <g class=\"tiles\" fill=\"none\" stroke-width=\"0.6\">\n";
  for (const Tile& tile : tiles) {
    if (tile.word.empty()) continue;
    const std::size_t len = tile.word.size();
    for (const Geodesic& g : tile.boundary) {
      os << "    <path class=\"tile len-" << len << "\" stroke=\"" << stroke_for_length(len) << "\" d=\"";
      if (const auto* c = std::get_if<HalfCircle>(&g)) {
        os << arc_path(canvas, *c);
      } else {
        const double x = canvas.x(std::get<VerticalLine>(g).x);
        os << "M " << num(x) << " " << num(canvas.y(0)) << " L " << num(x) << " 0";
      }
      os << "\"/>\n";
    }
  }
  os << "  </g>\n";

  os << "  <g class=\"circles\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\">\n";
  for (const SchottkyEntry& e : desc.entries()) {
    os << "    <path class=\"circle\" data-index=\"" << e.index << "\" d=\"" << arc_path(canvas, e.circle())
       << "\"/>\n";
  }
  os << "  </g>\n";
  os << "  <line class=\"axis\" x1=\"0\" y1=\"" << num(canvas.y(0)) << "\" x2=\"" << canvas.width() << "\" y2=\""
     << num(canvas.y(0)) << "\" stroke=\"gray\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace fuchsian
