# Tensors module - multidimensional matrix data model
