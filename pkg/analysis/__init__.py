# Analysis module - degrees, hyperdeterminants, pencils and invariants
