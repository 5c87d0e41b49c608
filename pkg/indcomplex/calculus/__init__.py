from indcomplex.calculus.forest import forest_lex_homotopy as forest_lex_homotopy
from indcomplex.calculus.forest import known_homotopy_type as known_homotopy_type
from indcomplex.calculus.lines import closed_form_L as closed_form_L
from indcomplex.calculus.lines import cycle_homotopy as cycle_homotopy
from indcomplex.calculus.lines import line_connectivity as line_connectivity
from indcomplex.calculus.lines import x_space as x_space
from indcomplex.calculus.spheres import SphereSpace as SphereSpace
from indcomplex.calculus.spheres import join as join
from indcomplex.calculus.spheres import reduced_betti_of as reduced_betti_of
from indcomplex.calculus.spheres import suspend as suspend
from indcomplex.calculus.spheres import wedge as wedge
