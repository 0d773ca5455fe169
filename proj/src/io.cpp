#include "cptkit/io.hpp"

#include <json.hpp>

namespace cptkit {

std::string matrix_to_json(const ComplexMatrix& m)
{
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto entries = nlohmann::ordered_json::array();
    for (const cplx& v : m.entries())
        entries.push_back({v.real(), v.imag()});
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

ComplexMatrix matrix_from_json(const std::string& text)
{
    const auto j = nlohmann::json::parse(text);
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows * cols)
        throw ShapeError("matrix JSON: entry count does not match rows*cols");
    std::vector<cplx> values;
    values.reserve(entries.size());
    for (const auto& e : entries)
        values.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    return ComplexMatrix(rows, cols, std::move(values));
}

std::string space_to_json(const SpinSpace& space, bool with_embedding)
{
    nlohmann::ordered_json j;
    j["two_s"] = space.two_s;
    j["massive"] = space.massive;
    j["dim"] = space.dim();
    auto labels = nlohmann::ordered_json::array();
    for (const auto& l : space.basis) {
        nlohmann::ordered_json jl;
        jl["u_sign"] = l.u_sign;
        jl["spin_z2"] = l.spin_z2;
        jl["p_sign"] = l.p_sign;
        labels.push_back(std::move(jl));
    }
    j["labels"] = std::move(labels);
    if (with_embedding && space.two_s <= explicit_two_s_cap()) {
        // Embedded vectors as the columns of a matrix in the shared format.
        ComplexMatrix emb(space.embedding_dim(), space.dim());
        for (std::size_t k = 0; k < space.dim(); ++k) {
            const StateVector v = space.embedded_state(k);
            for (std::size_t i = 0; i < v.dim(); ++i)
                emb(i, k) = v[i];
        }
        j["embedding"] = nlohmann::ordered_json::parse(matrix_to_json(emb));
    }
    return j.dump(2) + "\n";
}

std::string phases_to_json(const PhaseConvention& phases)
{
    nlohmann::ordered_json j;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [u, m2, p, theta_c, theta_pt] : phases.entries())
        entries.push_back({u, m2, p, theta_c, theta_pt});
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

PhaseConvention phases_from_json(const std::string& text)
{
    const auto j = nlohmann::json::parse(text);
    PhaseConvention conv;
    for (const auto& e : j.at("entries")) {
        BasisLabel label;
        label.u_sign = e.at(0).get<int>();
        label.spin_z2 = e.at(1).get<int>();
        label.p_sign = e.at(2).get<int>();
        conv.set(label, e.at(3).get<double>(), e.at(4).get<double>());
    }
    return conv;
}

std::string testfunction_to_json(const TestFunction& phi)
{
    nlohmann::ordered_json j;
    j["grid"]["n"] = phi.grid().size();
    j["grid"]["p_max"] = phi.grid().p_max();
    auto values = nlohmann::ordered_json::array();
    for (std::size_t point = 0; point < phi.grid().size(); ++point) {
        for (std::size_t l = 0; l < phi.labels().size(); ++l) {
            const auto [u, m2] = phi.labels().labels[l];
            const cplx v = phi.at(point, l);
            values.push_back({u, m2, point, v.real(), v.imag()});
        }
    }
    j["values"] = std::move(values);
    return j.dump(2) + "\n";
}

} // namespace cptkit
