#pragma once

// Minimal deterministic SVG writer for the line plots and contour maps.
// All coordinates are formatted with fixed precision so identical data
// always yields identical bytes.

#include <string>
#include <vector>

namespace masschain {

struct SvgStyle {
    std::string stroke = "#000000";
    double width = 1.0;
    std::string dash;    // e.g. "4,3"
    std::string fill = "none";
};

class SvgCanvas {
  public:
    SvgCanvas(double width, double height);

    // Data-space mapping; call before plotting.
    void set_viewport(double x_min, double x_max, double y_min, double y_max,
                      bool log_x = false, bool log_y = false);

    void polyline(const std::vector<std::pair<double, double>>& pts, const SvgStyle& style);
    void line(double x0, double y0, double x1, double y1, const SvgStyle& style);
    void circle(double x, double y, double radius_px, const std::string& color);
    void text(double x, double y, const std::string& s, double size_px = 11.0,
              const std::string& anchor = "start", const std::string& color = "#000000");
    // Pixel-space text (for titles/legends outside the data region).
    void text_px(double px, double py, const std::string& s, double size_px = 11.0,
                 const std::string& anchor = "start", const std::string& color = "#000000");
    void legend_entry(int slot, const std::string& label, const std::string& color);

    // Frame, tick marks and labels; ticks given in data space.
    void axes(const std::vector<double>& x_ticks, const std::vector<double>& y_ticks,
              const std::string& x_label, const std::string& y_label);

    std::string str() const;

    double px_x(double x) const;
    double px_y(double y) const;

  private:
    double w_, h_;
    double margin_ = 52.0;
    double x0_ = 0.0, x1_ = 1.0, y0_ = 0.0, y1_ = 1.0;
    bool log_x_ = false, log_y_ = false;
    std::string body_;
};

std::string format_tick(double v);

} // namespace masschain
