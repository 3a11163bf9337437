from qopolars.series.exponent import Exponent, emin, minimal_elements
from qopolars.series.fractional import FractionalSeries, InitialData, default_names, initial_data
from qopolars.series.ypoly import SeriesYPoly, substitute_monomial
from qopolars.series.literal import parse_series, parse_series_poly
