#ifndef APART_APART_HPP
#define APART_APART_HPP

#include <apart/bo.hpp>
#include <apart/core.hpp>
#include <apart/count_table.hpp>
#include <apart/enumerate.hpp>
#include <apart/extended.hpp>
#include <apart/families.hpp>
#include <apart/injections.hpp>
#include <apart/part_set.hpp>
#include <apart/partition.hpp>

#endif
