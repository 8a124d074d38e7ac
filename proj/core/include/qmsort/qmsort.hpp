#ifndef QMSORT_QMSORT_HPP
#define QMSORT_QMSORT_HPP

#include "qmsort/bounds.hpp"
#include "qmsort/clever.hpp"
#include "qmsort/dataset.hpp"
#include "qmsort/element.hpp"
#include "qmsort/merge.hpp"
#include "qmsort/metrics.hpp"
#include "qmsort/partition.hpp"
#include "qmsort/rng.hpp"
#include "qmsort/selection.hpp"
#include "qmsort/small_sort.hpp"
#include "qmsort/sort.hpp"
#include "qmsort/trial.hpp"

#endif // QMSORT_QMSORT_HPP
