"""Canon descent polynomials of Dyck paths."""
