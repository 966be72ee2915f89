// Copyright 2026 The AerialSynth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <nlohmann/json.hpp>

#include "aerialsynth/cli/pipeline_config.hpp"

namespace aerialsynth::cli {

// Runs tile -> extract-rois -> sample-finetune -> pool -> compose -> report
// and returns the summary document. With `dry_run` the dataset is indexed
// and the plan returned, but nothing is written.
nlohmann::ordered_json run_pipeline(const PipelineConfig& cfg, bool dry_run);

}  // namespace aerialsynth::cli
