# Data module - documents and cache management
