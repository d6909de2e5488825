#include "updraw/slopes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace updraw {

static constexpr double kPi = std::numbers::pi;

SlopeSet equispaced(int delta) {
    if (delta < 2) throw input_error("need at least two slopes");
    SlopeSet s;
    for (int k = 0; k < delta; ++k) s.angles.push_back(k * kPi / delta);
    return s;
}

SlopeSet make_slope_set(std::vector<double> angles) {
    for (double& a : angles) {
        a = std::fmod(a, kPi);
        if (a < 0) a += kPi;
        if (a > kPi - 1e-12) a = 0; /* pi is the horizontal slope again */
    }
    std::sort(angles.begin(), angles.end());
    std::vector<double> out;
    for (double a : angles)
        if (out.empty() || a - out.back() > 1e-12) out.push_back(a);
    if (out.empty() || out[0] > 1e-12)
        throw input_error("slope set must contain the horizontal slope 0: the construction "
                          "routes one segment of each edge horizontally");
    if ((int)out.size() < 2) throw input_error("need at least two distinct slopes");
    SlopeSet s;
    s.angles = std::move(out);
    return s;
}

SlopeSet parse_slopes(const std::string& text) {
    if (text.rfind("equispaced:", 0) == 0) {
        int delta = 0;
        try {
            delta = std::stoi(text.substr(11));
        } catch (...) {
            throw input_error("bad slope spec: " + text);
        }
        return equispaced(delta);
    }
    std::vector<double> angles;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        bool deg = false;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "deg") {
            deg = true;
            tok = tok.substr(0, tok.size() - 3);
        }
        double v;
        try {
            size_t pos = 0;
            v = std::stod(tok, &pos);
            while (pos < tok.size() && isspace((unsigned char)tok[pos])) ++pos;
            if (pos != tok.size()) throw std::invalid_argument("");
        } catch (...) {
            throw input_error("bad slope value: " + tok);
        }
        angles.push_back(deg ? v * kPi / 180.0 : v);
    }
    if (angles.empty()) throw input_error("empty slope list");
    return make_slope_set(angles);
}

ExtendedSlopeSet extend(const SlopeSet& s, int delta_star) {
    ExtendedSlopeSet es;
    es.real = s;
    es.delta_star = std::max(0, delta_star);
    int d = s.size();
    es.rho_star = kPi;
    for (int i = 0; i < d; ++i) {
        double next = i + 1 < d ? s.angles[i + 1] : s.angles[0] + kPi;
        es.rho_star = std::min(es.rho_star, next - s.angles[i]);
    }
    double step = es.rho_star / (es.delta_star + 1);
    for (int i = 0; i < d; ++i) {
        es.all.push_back(s.angles[i]);
        es.real_flag.push_back(true);
        for (int j = 1; j <= es.delta_star; ++j) {
            es.all.push_back(s.angles[i] + j * step);
            es.real_flag.push_back(false);
        }
    }
    return es;
}

int ExtendedSlopeSet::index_of(double angle, double tol) const {
    double a = std::fmod(angle, kPi);
    if (a < 0) a += kPi;
    for (int i = 0; i < (int)all.size(); ++i) {
        double diff = std::fabs(all[i] - a);
        diff = std::min(diff, kPi - diff);
        if (diff <= tol) return i;
    }
    return -1;
}

} // namespace updraw
