#include "lefschetz/exact_matrix.hpp"

#include <nlohmann/json.hpp>

namespace lefschetz {

ZMatrix::ZMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_)
            throw DimensionError("ragged initializer");
        for (long v : row) data_.emplace_back(v);
    }
}

ZMatrix ZMatrix::identity(int n) {
    ZMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMatrix ZMatrix::transposed() const {
    ZMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ZMatrix ZMatrix::operator*(const ZMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("product shape mismatch");
    ZMatrix p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) p.at(i, j) += a * o.at(k, j);
        }
    return p;
}

nlohmann::json ZMatrix::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& v : data_) entries.push_back(v.get_str());
    return {{"rows", rows_}, {"cols", cols_}, {"entries", std::move(entries)}};
}

ZMatrix ZMatrix::from_json(const nlohmann::json& j) {
    ZMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != m.rows_ * m.cols_)
        throw DimensionError("entry count does not match rows*cols");
    std::size_t idx = 0;
    for (const auto& e : entries) m.data_[idx++] = mpz_class(e.get<std::string>());
    return m;
}

} // namespace lefschetz
