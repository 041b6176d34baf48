#include "rotns/series.hpp"

#include <stdexcept>

namespace rotns {

void TimeGrid::validate() const {
  if (!(T > 0.0)) throw std::invalid_argument("time.T must be positive");
  if (M < 4) throw std::invalid_argument("time.M must be at least 4");
}

std::vector<double> TimeGrid::nodes() const {
  std::vector<double> t(static_cast<std::size_t>(M) + 1);
  for (int i = 0; i <= M; ++i) t[i] = node(i);
  return t;
}

FieldSeries::FieldSeries(std::vector<double> times, std::vector<SpectralField> fields) {
  if (times.size() != fields.size()) {
    throw std::invalid_argument("FieldSeries: times and fields differ in length");
  }
  times_.reserve(times.size());
  fields_.reserve(fields.size());
  for (std::size_t i = 0; i < times.size(); ++i) push_back(times[i], std::move(fields[i]));
}

void FieldSeries::push_back(double t, SpectralField field) {
  if (!times_.empty()) {
    if (!(t > times_.back())) throw std::invalid_argument("FieldSeries: times must increase");
    if (!(field.grid() == fields_.front().grid())) {
      throw std::invalid_argument("FieldSeries: all fields must share one grid");
    }
  }
  field.set_time(t);
  times_.push_back(t);
  fields_.push_back(std::move(field));
}

const Grid& FieldSeries::grid() const {
  if (fields_.empty()) throw std::invalid_argument("empty series");
  return fields_.front().grid();
}

void FieldSeries::check_same_nodes(const FieldSeries& other) const {
  if (times_ != other.times_) throw std::invalid_argument("FieldSeries: node mismatch");
}

FieldSeries FieldSeries::scaled(double a) const {
  FieldSeries out = *this;
  for (auto& f : out.fields_) f *= a;
  return out;
}

FieldSeries& FieldSeries::operator+=(const FieldSeries& other) {
  check_same_nodes(other);
  for (std::size_t i = 0; i < fields_.size(); ++i) fields_[i] += other.fields_[i];
  return *this;
}

FieldSeries& FieldSeries::operator-=(const FieldSeries& other) {
  check_same_nodes(other);
  for (std::size_t i = 0; i < fields_.size(); ++i) fields_[i] -= other.fields_[i];
  return *this;
}

FieldSeries FieldSeries::truncated(double horizon) const {
  FieldSeries out;
  for (std::size_t i = 0; i < times_.size() && times_[i] <= horizon; ++i) {
    out.push_back(times_[i], fields_[i]);
  }
  return out;
}

FieldSeries constant_series(const SpectralField& field, const std::vector<double>& times) {
  FieldSeries out;
  for (double t : times) out.push_back(t, field);
  return out;
}

}  // namespace rotns
