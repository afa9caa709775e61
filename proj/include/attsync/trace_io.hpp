#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "attsync/trace.hpp"

namespace attsync {

namespace detail {

inline std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw validation_error("cannot open '" + path + "' for writing");
    return f;
}

}  // namespace detail

/// Write the trace as two long-format CSV files: `<stem>_agents.csv` with one
/// row per (sample, agent) and `<stem>_metrics.csv` with one row per sample.
/// Values are printed with 17 significant digits for lossless round-trips.
inline void export_csv(const Trace& trace, const std::string& stem) {
    if (trace.samples.empty()) throw validation_error("export_csv: empty trace");
    {
        auto f = detail::open_out(stem + "_agents.csv");
        f << "t,agent,eps,q1,q2,q3,w1,w2,w3\n";
        for (const TraceSample& s : trace.samples) {
            for (size_t i = 0; i < s.state.attitudes.size(); ++i) {
                const UnitQuaternion& q = s.state.attitudes[i];
                const Vec3& w = s.state.omegas[i];
                f << detail::fmt17(s.t) << ',' << (i + 1) << ',' << detail::fmt17(q.eps) << ','
                  << detail::fmt17(q.vec.x1) << ',' << detail::fmt17(q.vec.x2) << ','
                  << detail::fmt17(q.vec.x3) << ',' << detail::fmt17(w.x1) << ','
                  << detail::fmt17(w.x2) << ',' << detail::fmt17(w.x3) << '\n';
            }
        }
    }
    {
        auto f = detail::open_out(stem + "_metrics.csv");
        f << "t,eps_star_roots,eps_star_all,k_index,W1,W2,V,disagreement,max_omega\n";
        for (const TraceSample& s : trace.samples) {
            const Metrics& m = s.metrics;
            f << detail::fmt17(s.t) << ',' << detail::fmt17(m.eps_star_roots) << ','
              << detail::fmt17(m.eps_star_all) << ',' << m.k_index << ','
              << detail::fmt17(m.w1) << ',' << detail::fmt17(m.w2) << ','
              << detail::fmt17(m.v_energy) << ',' << detail::fmt17(m.disagreement) << ','
              << detail::fmt17(m.max_omega_norm) << '\n';
        }
    }
}

namespace detail {

struct Series {
    std::string label;
    std::vector<double> y;
};

inline void write_line_chart(const std::string& path, const std::string& title,
                             const std::vector<double>& t, const std::vector<Series>& series) {
    const double W = 840, H = 520, ML = 70, MR = 160, MT = 50, MB = 50;
    double ymin = 0.0, ymax = 1.0;
    bool first = true;
    for (const Series& s : series)
        for (double v : s.y) {
            if (first) {
                ymin = ymax = v;
                first = false;
            }
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    if (ymax - ymin < 1e-12) {
        ymax += 0.5;
        ymin -= 0.5;
    }
    const double t0 = t.front(), t1 = std::max(t.back(), t.front() + 1e-12);
    const auto X = [&](double x) { return ML + (x - t0) / (t1 - t0) * (W - ML - MR); };
    const auto Y = [&](double y) { return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB); };
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

    auto f = open_out(path);
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << W / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"18\" "
         "font-family=\"sans-serif\">" << title << "</text>\n";
    // axes
    f << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR << "\" y2=\""
      << H - MB << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\"" << H - MB
      << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double ty = ymin + (ymax - ymin) * k / 4.0;
        const double tx = t0 + (t1 - t0) * k / 4.0;
        f << "<text x=\"" << ML - 8 << "\" y=\"" << Y(ty) + 4
          << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3g", ty);
        f << buf << "</text>\n";
        std::snprintf(buf, sizeof(buf), "%.3g", tx);
        f << "<text x=\"" << X(tx) << "\" y=\"" << H - MB + 18
          << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" << buf
          << "</text>\n";
    }
    f << "<text x=\"" << (ML + W - MR) / 2 << "\" y=\"" << H - 10
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">t [s]</text>\n";
    for (size_t si = 0; si < series.size(); ++si) {
        const char* color = palette[si % 10];
        f << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < t.size(); ++i)
            f << X(t[i]) << ',' << Y(series[si].y[i]) << ' ';
        f << "\"/>\n";
        const double ly = MT + 16.0 * static_cast<double>(si);
        f << "<line x1=\"" << W - MR + 12 << "\" y1=\"" << ly << "\" x2=\"" << W - MR + 36
          << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
          << "<text x=\"" << W - MR + 42 << "\" y=\"" << ly + 4
          << "\" font-size=\"12\" font-family=\"sans-serif\">" << series[si].label
          << "</text>\n";
    }
    f << "</svg>\n";
}

}  // namespace detail

/// Render the trace as four standalone SVG line charts:
/// `<stem>_eps.svg`, `<stem>_qvec.svg`, `<stem>_eps_star.svg`,
/// `<stem>_disagreement.svg`.
inline void export_svg(const Trace& trace, const std::string& stem) {
    if (trace.samples.empty()) throw validation_error("export_svg: empty trace");
    const size_t n = trace.samples.front().state.attitudes.size();
    std::vector<double> t;
    for (const TraceSample& s : trace.samples) t.push_back(s.t);

    std::vector<detail::Series> eps(n), qv;
    for (size_t i = 0; i < n; ++i) eps[i].label = "eps_" + std::to_string(i + 1);
    for (size_t i = 0; i < n; ++i)
        for (int c = 1; c <= 3; ++c)
            qv.push_back({"q" + std::to_string(c) + "_" + std::to_string(i + 1), {}});
    detail::Series star{"eps_star", {}}, dis{"disagreement", {}};
    for (const TraceSample& s : trace.samples) {
        for (size_t i = 0; i < n; ++i) {
            const UnitQuaternion& q = s.state.attitudes[i];
            eps[i].y.push_back(q.eps);
            qv[3 * i + 0].y.push_back(q.vec.x1);
            qv[3 * i + 1].y.push_back(q.vec.x2);
            qv[3 * i + 2].y.push_back(q.vec.x3);
        }
        star.y.push_back(s.metrics.eps_star_all);
        dis.y.push_back(s.metrics.disagreement);
    }
    detail::write_line_chart(stem + "_eps.svg", "Scalar parts", t, eps);
    detail::write_line_chart(stem + "_qvec.svg", "Vector parts", t, qv);
    detail::write_line_chart(stem + "_eps_star.svg", "Minimum scalar part", t, {star});
    detail::write_line_chart(stem + "_disagreement.svg", "Disagreement", t, {dis});
}

}  // namespace attsync
