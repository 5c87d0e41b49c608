from indcomplex.homology.chains import BettiVector as BettiVector
from indcomplex.homology.chains import BoundaryMatrix as BoundaryMatrix
from indcomplex.homology.chains import MultiFieldResult as MultiFieldResult
from indcomplex.homology.chains import betti as betti
from indcomplex.homology.chains import betti_multi_field as betti_multi_field
from indcomplex.homology.chains import conn_H as conn_H
from indcomplex.homology.chains import integral_homology as integral_homology
from indcomplex.homology.chains import join_convolution as join_convolution
