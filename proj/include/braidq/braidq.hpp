#pragma once

#include "braidq/braid_word.hpp"
#include "braidq/entanglement.hpp"
#include "braidq/link_analysis.hpp"
#include "braidq/matrix.hpp"
#include "braidq/quantum_state.hpp"
#include "braidq/representations.hpp"
