#pragma once

#include "aik/canonical.hpp"
#include "aik/code.hpp"
#include "aik/codec.hpp"
#include "aik/cut_system.hpp"
#include "aik/fingerprint.hpp"
#include "aik/invariants.hpp"
#include "aik/laurent.hpp"
#include "aik/moves.hpp"
#include "aik/numbering.hpp"
#include "aik/twisted.hpp"
