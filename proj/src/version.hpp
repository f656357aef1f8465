// SPDX-License-Identifier: Apache-2.0
#pragma once

#define LEVYRANK_VERSION_STRING "0.1.0"
