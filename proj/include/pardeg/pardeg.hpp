// Copyright 2026 The pardeg Authors
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

#include "pardeg/compare.hpp"
#include "pardeg/definability.hpp"
#include "pardeg/error.hpp"
#include "pardeg/format.hpp"
#include "pardeg/function.hpp"
#include "pardeg/lattice.hpp"
#include "pardeg/plevel.hpp"
#include "pardeg/relation.hpp"
#include "pardeg/report.hpp"
#include "pardeg/term.hpp"
#include "pardeg/verify.hpp"
#include "pardeg/zoo.hpp"
