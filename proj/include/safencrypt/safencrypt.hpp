// Copyright 2026 The SafEncrypt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Umbrella header: the full public API.

#pragma once

#include "safencrypt/algorithm.hpp"       // IWYU pragma: export
#include "safencrypt/cipher_engine.hpp"   // IWYU pragma: export
#include "safencrypt/encoding.hpp"        // IWYU pragma: export
#include "safencrypt/error_mapping.hpp"   // IWYU pragma: export
#include "safencrypt/errors.hpp"          // IWYU pragma: export
#include "safencrypt/key_material.hpp"    // IWYU pragma: export
#include "safencrypt/registry.hpp"        // IWYU pragma: export
#include "safencrypt/step_builder.hpp"    // IWYU pragma: export
#include "safencrypt/streaming.hpp"       // IWYU pragma: export
