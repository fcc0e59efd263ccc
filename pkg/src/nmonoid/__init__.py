"""Right-ideal morphisms of n-dimensional free monoids."""
