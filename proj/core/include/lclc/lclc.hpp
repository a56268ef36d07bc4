#pragma once

#include "lclc/entropy.hpp"
#include "lclc/error.hpp"
#include "lclc/inequalities.hpp"
#include "lclc/io.hpp"
#include "lclc/lattice.hpp"
#include "lclc/lyapunov.hpp"
#include "lclc/majorization.hpp"
#include "lclc/matching.hpp"
#include "lclc/report.hpp"
