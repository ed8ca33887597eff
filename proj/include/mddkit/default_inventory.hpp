#pragma once

#include <string_view>

namespace mddkit {

// Bundled inventory: the phonetiser-index collapse table plus the canonical
// Buckwalter-style symbol set (short/long vowels, their pharyngealized
// uppercase variants, consonants and geminate consonants).
// Kept in sync with data/default_inventory.txt.
inline constexpr std::string_view kDefaultInventoryText = R"(# raw<TAB>canonical
II0	II
I0I0	II
I0	I
I1	I
ii0	ii
i0i0	ii
i0	i
i1	i
UU0	UU
U0	U
U1	U
uu0	uu
u0u0	uu
uu1	uu
u0	u
u1	u

[canonical]
# vowels
a
aa
A
AA
i
ii
I
II
u
uu
U
UU
# consonants
<
b
t
v
j
H
x
d
*
r
z
s
$
S
D
T
Z
E
g
f
q
k
l
m
n
h
w
y
# geminates
<<
bb
tt
vv
jj
HH
xx
dd
**
rr
zz
ss
$$
SS
DD
TT
ZZ
EE
gg
ff
qq
kk
ll
mm
nn
hh
ww
yy
)";

}  // namespace mddkit
