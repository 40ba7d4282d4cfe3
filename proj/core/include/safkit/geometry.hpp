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

#pragma once

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

namespace safkit {

using Vec3 = Eigen::Vector3d;

inline constexpr double kSpeedOfSoundMps = 343.0;

// Speaker position in spherical coordinates relative to the camera, which
// sits at the microphone centroid. Azimuth is measured off the array axis
// (+x) within the horizontal plane and is limited to [0, pi]: a linear array
// cannot tell the two mirror half-spaces apart, so locations fold onto y >= 0.
struct SpeakerLocation3D {
  double azimuth_rad = 0.0;
  double elevation_rad = 0.0;
  double distance_m = 1.0;

  SpeakerLocation3D() = default;
  // Throws std::invalid_argument when outside azimuth [0, pi],
  // elevation [-pi/2, pi/2] or distance <= 0.
  SpeakerLocation3D(double azimuth, double elevation, double distance);
};

class MicArrayGeometry {
 public:
  // Positions are given in meters in the camera frame; the constructor
  // recenters them so the mic centroid (= camera) is the origin. An empty
  // pair list defaults to all adjacent pairs (0,1), (1,2), ...
  explicit MicArrayGeometry(std::vector<Vec3> mic_positions,
                            std::vector<std::pair<int, int>> pairs = {},
                            Vec3 array_axis = Vec3::UnitX());

  // JSON schema: {"mics": [[x,y,z], ...], "pairs": [[m1,m2], ...],
  // "array_axis": [x,y,z]}; "pairs" and "array_axis" optional.
  static MicArrayGeometry from_json(const std::string& json_text);
  static MicArrayGeometry from_json_file(const std::string& path);

  int num_mics() const { return static_cast<int>(mics_.size()); }
  const std::vector<Vec3>& mic_positions() const { return mics_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  const Vec3& array_axis() const { return axis_; }
  Vec3 camera_position() const { return Vec3::Zero(); }

  // Camera-to-mic distance d_om.
  double mic_distance(int mic) const;
  // Signed coordinate of a mic along the array axis.
  double axial_coordinate(int mic) const;
  // True when every mic lies on the array axis within tol meters.
  bool is_collinear(double tol = 1e-6) const;

 private:
  std::vector<Vec3> mics_;
  std::vector<std::pair<int, int>> pairs_;
  Vec3 axis_;
};

// Unit direction of the speaker: (cos el cos az, cos el sin az, sin el).
Vec3 speaker_unit_direction(const SpeakerLocation3D& loc);

Vec3 speaker_to_cartesian(const SpeakerLocation3D& loc);

// Inverse of speaker_to_cartesian. Points with y < 0 fold onto the
// representable half-space; at the poles azimuth ties break to 0.
// Throws std::invalid_argument on a zero-length vector.
SpeakerLocation3D cartesian_to_location(const Vec3& point);

// Speaker-to-mic distance in law-of-cosines form,
//   d^2 = d_om^2 + d_o^2 - 2 d_o (m . u),
// which for a mic on the array axis reduces to
//   d^2 = x^2 + d_o^2 - 2 x d_o cos(az) cos(el)
// with the signed axial coordinate x (mics behind the camera flip the
// cosine term's sign).
double mic_to_speaker_distance(const MicArrayGeometry& geom,
                               const SpeakerLocation3D& loc, int mic);

// Distances from the speaker to both mics of every pair.
std::vector<std::pair<double, double>> pair_distances(
    const MicArrayGeometry& geom, const SpeakerLocation3D& loc);

}  // namespace safkit
