// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 The safkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "safkit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace safkit {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kRangeSlack = 1e-12;
}  // namespace

SpeakerLocation3D::SpeakerLocation3D(double azimuth, double elevation,
                                     double distance)
    : azimuth_rad(azimuth), elevation_rad(elevation), distance_m(distance) {
  if (!(distance > 0.0)) {
    throw std::invalid_argument("SpeakerLocation3D: distance must be > 0");
  }
  if (azimuth < -kRangeSlack || azimuth > std::numbers::pi + kRangeSlack) {
    throw std::invalid_argument("SpeakerLocation3D: azimuth outside [0, pi]");
  }
  if (elevation < -kHalfPi - kRangeSlack || elevation > kHalfPi + kRangeSlack) {
    throw std::invalid_argument(
        "SpeakerLocation3D: elevation outside [-pi/2, pi/2]");
  }
}

MicArrayGeometry::MicArrayGeometry(std::vector<Vec3> mic_positions,
                                   std::vector<std::pair<int, int>> pairs,
                                   Vec3 array_axis)
    : mics_(std::move(mic_positions)), pairs_(std::move(pairs)) {
  const int m = static_cast<int>(mics_.size());
  if (m < 2) {
    throw std::invalid_argument("MicArrayGeometry: need at least 2 mics");
  }
  if (array_axis.norm() < 1e-12) {
    throw std::invalid_argument("MicArrayGeometry: zero array axis");
  }
  axis_ = array_axis.normalized();

  // Camera is defined to sit at the mic centroid; recenter.
  Vec3 centroid = Vec3::Zero();
  for (const Vec3& p : mics_) centroid += p;
  centroid /= static_cast<double>(m);
  for (Vec3& p : mics_) p -= centroid;

  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if ((mics_[i] - mics_[j]).norm() <= 1e-6) {
        throw std::invalid_argument("MicArrayGeometry: coincident mics");
      }
    }
  }

  if (pairs_.empty()) {
    for (int i = 0; i + 1 < m; ++i) pairs_.emplace_back(i, i + 1);
  }
  for (const auto& [a, b] : pairs_) {
    if (a < 0 || b < 0 || a >= m || b >= m || a == b) {
      throw std::invalid_argument("MicArrayGeometry: invalid mic pair");
    }
  }
}

MicArrayGeometry MicArrayGeometry::from_json(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  if (!j.contains("mics") || !j["mics"].is_array()) {
    throw std::invalid_argument("geometry json: missing \"mics\" array");
  }
  std::vector<Vec3> mics;
  for (const auto& p : j["mics"]) {
    if (!p.is_array() || p.size() != 3) {
      throw std::invalid_argument("geometry json: mic must be [x,y,z]");
    }
    mics.emplace_back(p[0].get<double>(), p[1].get<double>(),
                      p[2].get<double>());
  }
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("pairs")) {
    for (const auto& p : j["pairs"]) {
      if (!p.is_array() || p.size() != 2) {
        throw std::invalid_argument("geometry json: pair must be [m1,m2]");
      }
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
  }
  Vec3 axis = Vec3::UnitX();
  if (j.contains("array_axis")) {
    const auto& a = j["array_axis"];
    if (!a.is_array() || a.size() != 3) {
      throw std::invalid_argument("geometry json: array_axis must be [x,y,z]");
    }
    axis = Vec3(a[0].get<double>(), a[1].get<double>(), a[2].get<double>());
  }
  return MicArrayGeometry(std::move(mics), std::move(pairs), axis);
}

MicArrayGeometry MicArrayGeometry::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("geometry json: cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

double MicArrayGeometry::mic_distance(int mic) const {
  return mics_.at(static_cast<std::size_t>(mic)).norm();
}

double MicArrayGeometry::axial_coordinate(int mic) const {
  return mics_.at(static_cast<std::size_t>(mic)).dot(axis_);
}

bool MicArrayGeometry::is_collinear(double tol) const {
  for (const Vec3& p : mics_) {
    const Vec3 perp = p - p.dot(axis_) * axis_;
    if (perp.norm() > tol) return false;
  }
  return true;
}

Vec3 speaker_unit_direction(const SpeakerLocation3D& loc) {
  const double ce = std::cos(loc.elevation_rad);
  return Vec3(ce * std::cos(loc.azimuth_rad), ce * std::sin(loc.azimuth_rad),
              std::sin(loc.elevation_rad));
}

Vec3 speaker_to_cartesian(const SpeakerLocation3D& loc) {
  return loc.distance_m * speaker_unit_direction(loc);
}

SpeakerLocation3D cartesian_to_location(const Vec3& point) {
  const double d = point.norm();
  if (!(d > 0.0)) {
    throw std::invalid_argument("cartesian_to_location: zero-length vector");
  }
  const double el = std::asin(std::clamp(point.z() / d, -1.0, 1.0));
  const double horiz = std::hypot(point.x(), point.y());
  // Pole tie-break: azimuth is 0 when the horizontal projection vanishes.
  const double az =
      horiz == 0.0 ? 0.0 : std::atan2(std::abs(point.y()), point.x());
  return SpeakerLocation3D(std::clamp(az, 0.0, std::numbers::pi),
                           std::clamp(el, -kHalfPi, kHalfPi), d);
}

double mic_to_speaker_distance(const MicArrayGeometry& geom,
                               const SpeakerLocation3D& loc, int mic) {
  const Vec3& m = geom.mic_positions().at(static_cast<std::size_t>(mic));
  const double axial = m.dot(geom.array_axis());
  const Vec3 perp = m - axial * geom.array_axis();
  const double cos_axis =
      std::cos(loc.azimuth_rad) * std::cos(loc.elevation_rad);
  // Law of cosines with d_om cos(angle) = m . u, split so the on-axis part is
  // the signed-coordinate form x * cos(az) * cos(el).
  const double proj = axial * cos_axis + perp.dot(speaker_unit_direction(loc));
  const double d2 = m.squaredNorm() + loc.distance_m * loc.distance_m -
                    2.0 * loc.distance_m * proj;
  return std::sqrt(std::max(d2, 0.0));
}

std::vector<std::pair<double, double>> pair_distances(
    const MicArrayGeometry& geom, const SpeakerLocation3D& loc) {
  std::vector<std::pair<double, double>> out;
  out.reserve(geom.pairs().size());
  for (const auto& [m1, m2] : geom.pairs()) {
    out.emplace_back(mic_to_speaker_distance(geom, loc, m1),
                     mic_to_speaker_distance(geom, loc, m2));
  }
  return out;
}

}  // namespace safkit
