#include "masschain/svg.hpp"

#include <cmath>
#include <cstdio>

namespace masschain {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

std::string format_tick(double v) {
    char buf[40];
    const double a = std::abs(v);
    if (v == 0.0)
        std::snprintf(buf, sizeof buf, "0");
    else if (a >= 0.01 && a < 10000.0)
        std::snprintf(buf, sizeof buf, "%g", v);
    else
        std::snprintf(buf, sizeof buf, "%.0e", v);
    return buf;
}

SvgCanvas::SvgCanvas(double width, double height) : w_(width), h_(height) {}

void SvgCanvas::set_viewport(double x_min, double x_max, double y_min, double y_max,
                             bool log_x, bool log_y) {
    log_x_ = log_x;
    log_y_ = log_y;
    x0_ = log_x ? std::log10(x_min) : x_min;
    x1_ = log_x ? std::log10(x_max) : x_max;
    y0_ = log_y ? std::log10(y_min) : y_min;
    y1_ = log_y ? std::log10(y_max) : y_max;
}

double SvgCanvas::px_x(double x) const {
    const double t = ((log_x_ ? std::log10(x) : x) - x0_) / (x1_ - x0_);
    return margin_ + t * (w_ - 2.0 * margin_);
}

double SvgCanvas::px_y(double y) const {
    const double t = ((log_y_ ? std::log10(y) : y) - y0_) / (y1_ - y0_);
    return h_ - margin_ - t * (h_ - 2.0 * margin_);
}

void SvgCanvas::polyline(const std::vector<std::pair<double, double>>& pts, const SvgStyle& style) {
    if (pts.size() < 2) return;
    body_ += "<polyline points=\"";
    for (const auto& [x, y] : pts) {
        body_ += fmt(px_x(x));
        body_ += ",";
        body_ += fmt(px_y(y));
        body_ += " ";
    }
    body_ += "\" fill=\"" + style.fill + "\" stroke=\"" + style.stroke + "\" stroke-width=\"" +
             fmt(style.width) + "\"";
    if (!style.dash.empty()) body_ += " stroke-dasharray=\"" + style.dash + "\"";
    body_ += "/>\n";
}

void SvgCanvas::line(double x0, double y0, double x1, double y1, const SvgStyle& style) {
    body_ += "<line x1=\"" + fmt(px_x(x0)) + "\" y1=\"" + fmt(px_y(y0)) + "\" x2=\"" +
             fmt(px_x(x1)) + "\" y2=\"" + fmt(px_y(y1)) + "\" stroke=\"" + style.stroke +
             "\" stroke-width=\"" + fmt(style.width) + "\"";
    if (!style.dash.empty()) body_ += " stroke-dasharray=\"" + style.dash + "\"";
    body_ += "/>\n";
}

void SvgCanvas::circle(double x, double y, double radius_px, const std::string& color) {
    body_ += "<circle cx=\"" + fmt(px_x(x)) + "\" cy=\"" + fmt(px_y(y)) + "\" r=\"" +
             fmt(radius_px) + "\" fill=\"" + color + "\"/>\n";
}

void SvgCanvas::text(double x, double y, const std::string& s, double size_px,
                     const std::string& anchor, const std::string& color) {
    text_px(px_x(x), px_y(y), s, size_px, anchor, color);
}

void SvgCanvas::text_px(double px, double py, const std::string& s, double size_px,
                        const std::string& anchor, const std::string& color) {
    body_ += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(py) + "\" font-size=\"" + fmt(size_px) +
             "\" font-family=\"sans-serif\" text-anchor=\"" + anchor + "\" fill=\"" + color +
             "\">" + escape(s) + "</text>\n";
}

void SvgCanvas::legend_entry(int slot, const std::string& label, const std::string& color) {
    const double x = w_ - margin_ - 130.0;
    const double y = margin_ + 14.0 + 16.0 * slot;
    body_ += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(y - 4.0) + "\" x2=\"" + fmt(x + 22.0) +
             "\" y2=\"" + fmt(y - 4.0) + "\" stroke=\"" + color + "\" stroke-width=\"2.00\"/>\n";
    text_px(x + 28.0, y, label, 11.0);
}

void SvgCanvas::axes(const std::vector<double>& x_ticks, const std::vector<double>& y_ticks,
                     const std::string& x_label, const std::string& y_label) {
    body_ += "<rect x=\"" + fmt(margin_) + "\" y=\"" + fmt(margin_) + "\" width=\"" +
             fmt(w_ - 2.0 * margin_) + "\" height=\"" + fmt(h_ - 2.0 * margin_) +
             "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.00\"/>\n";
    for (double t : x_ticks) {
        const double px = px_x(t);
        body_ += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(h_ - margin_) + "\" x2=\"" + fmt(px) +
                 "\" y2=\"" + fmt(h_ - margin_ + 5.0) + "\" stroke=\"#000000\" stroke-width=\"1.00\"/>\n";
        text_px(px, h_ - margin_ + 18.0, format_tick(t), 10.0, "middle");
    }
    for (double t : y_ticks) {
        const double py = px_y(t);
        body_ += "<line x1=\"" + fmt(margin_ - 5.0) + "\" y1=\"" + fmt(py) + "\" x2=\"" +
                 fmt(margin_) + "\" y2=\"" + fmt(py) + "\" stroke=\"#000000\" stroke-width=\"1.00\"/>\n";
        text_px(margin_ - 8.0, py + 3.5, format_tick(t), 10.0, "end");
    }
    text_px(w_ / 2.0, h_ - 12.0, x_label, 12.0, "middle");
    body_ += "<text x=\"14\" y=\"" + fmt(h_ / 2.0) + "\" font-size=\"12.00\" font-family=\"sans-serif\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
             fmt(h_ / 2.0) + ")\" fill=\"#000000\">" + escape(y_label) + "</text>\n";
}

std::string SvgCanvas::str() const {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w_) +
                      "\" height=\"" + fmt(h_) + "\" viewBox=\"0 0 " + fmt(w_) + " " + fmt(h_) +
                      "\">\n<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    out += body_;
    out += "</svg>\n";
    return out;
}

} // namespace masschain
