#ifndef TERMFORGE_MODEL_IO_HPP
#define TERMFORGE_MODEL_IO_HPP

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "termforge/common.hpp"
#include "termforge/embedding.hpp"

namespace termforge {

namespace detail {

inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

[[noreturn]] inline void load_fail(const std::string& path, size_t line, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace detail

// Text vector format: header "|V| dim", then one word per line followed by
// its input vector at 17 significant digits -- the layout the usual
// embedding tools emit in text mode. Optional marked trailer sections
// (#counts, #wout, #params, #loss) carry the rest of the model so that a
// save/load round trip is exact; plain files from other tools simply end
// after the vector rows.
inline void save_model(const EmbeddingModel& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    const size_t v = m.vocab.size();
    out << v << ' ' << m.dim << '\n';
    for (size_t i = 0; i < v; ++i) {
        out << m.vocab.words[i];
        const float* row = m.in_row(static_cast<int>(i));
        for (int d = 0; d < m.dim; ++d) out << ' ' << detail::fmt17(row[d]);
        out << '\n';
    }
    out << "#counts\n";
    for (size_t i = 0; i < v; ++i) out << m.vocab.counts[i] << '\n';
    out << "#wout\n";
    for (size_t i = 0; i < v; ++i) {
        const float* row = m.out_row(static_cast<int>(i));
        for (int d = 0; d < m.dim; ++d) out << (d ? " " : "") << detail::fmt17(row[d]);
        out << '\n';
    }
    const TrainParams& p = m.params;
    out << "#params\n"
        << (p.mode == TrainParams::Mode::cbow ? "cbow" : "skipgram") << ' ' << p.dim << ' '
        << p.window << ' ' << p.negatives << ' ' << detail::fmt17(p.sample) << ' ' << p.iters
        << ' ' << p.min_count << ' ' << detail::fmt17(p.alpha0) << ' ' << p.workers << ' '
        << p.rng_seed << '\n';
    out << "#loss\n";
    for (size_t i = 0; i < m.mean_epoch_loss.size(); ++i)
        out << (i ? " " : "") << detail::fmt17(m.mean_epoch_loss[i]);
    out << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline EmbeddingModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);

    EmbeddingModel m;
    std::string line;
    size_t lineno = 0;

    auto next_line = [&](bool required) {
        if (!std::getline(in, line)) {
            if (required) detail::load_fail(path, lineno + 1, "unexpected end of file");
            return false;
        }
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    };

    next_line(true);
    long long v = 0, dim = 0;
    {
        std::istringstream head(line);
        if (!(head >> v >> dim) || v < 0 || dim < 1)
            detail::load_fail(path, lineno, "malformed header, expected \"<vocab> <dim>\"");
        std::string extra;
        if (head >> extra) detail::load_fail(path, lineno, "malformed header, expected \"<vocab> <dim>\"");
    }
    m.dim = static_cast<int>(dim);
    m.params.dim = m.dim;
    m.w_in.reserve(static_cast<size_t>(v) * static_cast<size_t>(dim));

    for (long long i = 0; i < v; ++i) {
        next_line(true);
        const char* p = line.c_str();
        while (*p == ' ' || *p == '\t') ++p;
        const char* word_end = p;
        while (*word_end && *word_end != ' ' && *word_end != '\t') ++word_end;
        if (word_end == p) detail::load_fail(path, lineno, "missing word");
        std::string word(p, word_end);
        if (m.vocab.index.count(word)) detail::load_fail(path, lineno, "duplicate word: " + word);
        p = word_end;
        for (long long d = 0; d < dim; ++d) {
            char* end = nullptr;
            double val = std::strtod(p, &end);
            if (end == p)
                detail::load_fail(path, lineno,
                                  "expected " + std::to_string(dim) + " values for word \"" + word +
                                      "\", found " + std::to_string(d));
            m.w_in.push_back(static_cast<float>(val));
            p = end;
        }
        while (*p == ' ' || *p == '\t') ++p;
        if (*p) detail::load_fail(path, lineno, "trailing garbage after vector");
        m.vocab.index.emplace(word, static_cast<int>(m.vocab.words.size()));
        m.vocab.words.push_back(std::move(word));
        m.vocab.counts.push_back(1);
        m.vocab.total_count += 1;
    }
    m.w_out.assign(static_cast<size_t>(v) * static_cast<size_t>(dim), 0.0f);

    while (next_line(false)) {
        if (trim(line).empty()) continue;
        if (line == "#counts") {
            m.vocab.total_count = 0;
            for (long long i = 0; i < v; ++i) {
                next_line(true);
                char* end = nullptr;
                long long c = std::strtoll(line.c_str(), &end, 10);
                if (end == line.c_str() || c < 0) detail::load_fail(path, lineno, "bad count");
                m.vocab.counts[static_cast<size_t>(i)] = c;
                m.vocab.total_count += c;
            }
        } else if (line == "#wout") {
            for (long long i = 0; i < v; ++i) {
                next_line(true);
                const char* p = line.c_str();
                for (long long d = 0; d < dim; ++d) {
                    char* end = nullptr;
                    double val = std::strtod(p, &end);
                    if (end == p) detail::load_fail(path, lineno, "bad output vector row");
                    m.w_out[static_cast<size_t>(i * dim + d)] = static_cast<float>(val);
                    p = end;
                }
            }
        } else if (line == "#params") {
            next_line(true);
            std::istringstream ps(line);
            std::string mode;
            if (!(ps >> mode >> m.params.dim >> m.params.window >> m.params.negatives >>
                  m.params.sample >> m.params.iters >> m.params.min_count >> m.params.alpha0 >>
                  m.params.workers >> m.params.rng_seed))
                detail::load_fail(path, lineno, "bad params line");
            m.params.mode =
                mode == "skipgram" ? TrainParams::Mode::skipgram : TrainParams::Mode::cbow;
        } else if (line == "#loss") {
            next_line(true);
            std::istringstream ls(line);
            double x;
            m.mean_epoch_loss.clear();
            while (ls >> x) m.mean_epoch_loss.push_back(x);
        } else {
            detail::load_fail(path, lineno, "unrecognized section: " + line);
        }
    }
    return m;
}

}  // namespace termforge

#endif
