#pragma once

#include "qskein/algebra.hpp"
#include "qskein/chords.hpp"
#include "qskein/classical.hpp"
#include "qskein/curves.hpp"
#include "qskein/io.hpp"
#include "qskein/parse.hpp"
#include "qskein/rewrite.hpp"
#include "qskein/ring.hpp"
#include "qskein/sphere.hpp"
#include "qskein/verify.hpp"
