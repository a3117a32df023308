#include "wake/signal.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wake {

std::size_t WakeConfig::window_length(double fs) const {
    return static_cast<std::size_t>(std::llround(window_seconds * fs));
}

std::pair<double, double> WakeConfig::cutoff_band(double fs) const {
    const double hi = cutoff_hi > 0.0 ? cutoff_hi : fs / 4.0;
    return {cutoff_lo, hi};
}

void WakeConfig::validate(double fs) const {
    if (fs <= 0.0) throw std::invalid_argument("config: sampling rate must be positive");
    if (levels < 1) throw std::invalid_argument("config: levels must be >= 1");
    if (ar_order < 1) throw std::invalid_argument("config: ar_order must be >= 1");
    if (psd_grid < 2) throw std::invalid_argument("config: psd_grid must be >= 2");
    const std::size_t L = window_length(fs);
    const std::size_t min_len = std::size_t{1} << levels;
    if (L < min_len)
        throw std::invalid_argument("config: window length " + std::to_string(L) +
                                    " shorter than 2^levels = " + std::to_string(min_len));
    if (L <= static_cast<std::size_t>(ar_order))
        throw std::invalid_argument("config: window length must exceed ar_order");
    const auto [lo, hi] = cutoff_band(fs);
    if (!(0.0 <= lo && lo < hi && hi <= fs / 2.0))
        throw std::invalid_argument("config: cutoff band must satisfy 0 <= lo < hi <= fs/2");
}

namespace {

bool parse_double(const std::string& tok, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        return pos == tok.size();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

MotionSignal load_csv(const std::string& path, int column, double fs_override) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_csv: cannot open " + path);

    MotionSignal sig;
    sig.fs = fs_override;
    sig.label = path;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        if (line[0] == '#') {
            const auto pos = line.find("fs=");
            if (pos != std::string::npos && fs_override <= 0.0) {
                double fs = 0.0;
                if (parse_double(line.substr(pos + 3), fs) && fs > 0.0) sig.fs = fs;
            }
            continue;
        }
        std::stringstream ss(line);
        std::string tok;
        int field = 0;
        bool found = false;
        while (std::getline(ss, tok, ',')) {
            if (field == column + 1) {  // field 0 is the index/time column
                double v = 0.0;
                if (!parse_double(tok, v))
                    throw std::runtime_error("load_csv: malformed value at line " +
                                             std::to_string(line_no) + " in " + path);
                if (!std::isfinite(v))
                    throw std::runtime_error("load_csv: non-finite value at line " +
                                             std::to_string(line_no) + " in " + path);
                sig.samples.push_back(v);
                found = true;
                break;
            }
            ++field;
        }
        if (!found)
            throw std::runtime_error("load_csv: line " + std::to_string(line_no) + " in " + path +
                                     " has no column " + std::to_string(column));
    }
    if (sig.fs <= 0.0)
        throw std::runtime_error("load_csv: sampling rate missing; add a '# fs=<Hz>' header or pass an override");
    return sig;
}

void save_run(std::span<const SampleOutput> rows, const std::string& path, double fs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_run: cannot open " + path + " for writing");
    char buf[128];
    std::snprintf(buf, sizeof buf, "# fs=%.17g\n", fs);
    out << buf;
    out << "# n,m,v_pred,i_pred,f_d_active\n";
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g,%.17g,%.17g\n",
                      static_cast<long long>(r.n), r.m, r.v_pred, r.i_pred, r.f_d_active);
        out << buf;
    }
    if (!out) throw std::runtime_error("save_run: write failure on " + path);
}

SignalWindow make_window(const MotionSignal& signal, std::size_t n, std::size_t length) {
    if (length == 0) throw std::invalid_argument("make_window: zero length");
    if (n + 1 < length)
        throw std::invalid_argument("make_window: insufficient history (n=" + std::to_string(n) +
                                    ", length=" + std::to_string(length) + ")");
    if (n >= signal.size()) throw std::invalid_argument("make_window: index past end of signal");
    SignalWindow w;
    w.start_index = n + 1 - length;
    w.fs = signal.fs;
    w.values.assign(signal.samples.begin() + static_cast<std::ptrdiff_t>(w.start_index),
                    signal.samples.begin() + static_cast<std::ptrdiff_t>(n + 1));
    return w;
}

double mean(std::span<const double> x) {
    if (x.empty()) return 0.0;
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double variance(std::span<const double> x) {
    if (x.empty()) return 0.0;
    const double mu = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - mu) * (v - mu);
    return s / static_cast<double>(x.size());
}

}  // namespace wake
