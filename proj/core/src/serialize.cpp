// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#include "prelog/serialize.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "prelog/errors.hpp"

namespace prelog {

namespace {

nlohmann::json matrix_to_json_value(const ComplexMatrix &mat) {
    nlohmann::json entries = nlohmann::json::array();
    for (const cplx &z : mat.entries()) {
        entries.push_back({z.real(), z.imag()});
    }
    return nlohmann::json{{"rows", mat.rows()}, {"cols", mat.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json_value(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw IoError("matrix JSON: expected object with rows, cols, entries");
    }
    const auto rows = j.at("rows").get<std::int64_t>();
    const auto cols = j.at("cols").get<std::int64_t>();
    if (rows < 1 || cols < 1) {
        throw IoError("matrix JSON: rows and cols must be positive");
    }
    const nlohmann::json &entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows * cols)) {
        throw IoError("matrix JSON: entries must hold rows*cols [re, im] pairs");
    }
    ComplexMatrix mat(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::size_t i = 0;
    for (const nlohmann::json &pair : entries) {
        if (!pair.is_array() || pair.size() != 2) {
            throw IoError("matrix JSON: every entry must be an [re, im] pair");
        }
        mat.entries()[i++] = cplx{pair.at(0).get<double>(), pair.at(1).get<double>()};
    }
    if (!mat.is_finite()) {
        throw IoError("matrix JSON: non-finite entry");
    }
    return mat;
}

nlohmann::json parse(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw IoError("malformed JSON");
    }
    return j;
}

} // namespace

std::string matrix_to_json(const ComplexMatrix &mat) {
    return matrix_to_json_value(mat).dump();
}

ComplexMatrix matrix_from_json(const std::string &text) {
    return matrix_from_json_value(parse(text));
}

std::string correlation_root_to_json(const CorrelationRoot &root) {
    nlohmann::json j = matrix_to_json_value(root.mat);
    j["n"] = root.n();
    j["q"] = root.q();
    return j.dump();
}

CorrelationRoot correlation_root_from_json(const std::string &text, double rel_tol) {
    const nlohmann::json j = parse(text);
    ComplexMatrix mat = matrix_from_json_value(j);
    if (j.contains("n") && j.at("n").get<std::int64_t>() != static_cast<std::int64_t>(mat.rows())) {
        throw IoError("correlation root JSON: n disagrees with rows");
    }
    if (j.contains("q") && j.at("q").get<std::int64_t>() != static_cast<std::int64_t>(mat.cols())) {
        throw IoError("correlation root JSON: q disagrees with cols");
    }
    return validate_correlation_root(std::move(mat), rel_tol);
}

std::string property_a_report_to_json(const PropertyAReport &report) {
    nlohmann::json j{{"holds", report.holds},
                     {"cardinality_k", report.cardinality_k},
                     {"failures_examined", report.failures_examined},
                     {"flagged_marginal_tests", report.flagged_marginal_tests}};
    if (report.witness_k) {
        j["witness_k"] = *report.witness_k;
    }
    return j.dump();
}

std::string prelog_report_to_json(const PrelogReport &report) {
    nlohmann::json j{{"upper", report.upper},
                     {"lower", report.lower},
                     {"siso", report.siso},
                     {"coincide", report.coincide},
                     {"lower_is_conservative", report.lower_is_conservative}};
    if (report.optimal_m) {
        j["optimal_m"] = *report.optimal_m;
    }
    return j.dump();
}

std::string block_sample_to_json(const BlockSample &sample) {
    nlohmann::json x = nlohmann::json::array();
    for (const cplx &z : sample.x) {
        x.push_back({z.real(), z.imag()});
    }
    nlohmann::json j{{"x", std::move(x)},
                     {"s", matrix_to_json_value(sample.s)},
                     {"w", matrix_to_json_value(sample.w)},
                     {"y", matrix_to_json_value(sample.y)}};
    return j.dump();
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write file: " + path);
    }
    out << content;
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

} // namespace prelog
