"""U-independence systems of knot diagrams."""
