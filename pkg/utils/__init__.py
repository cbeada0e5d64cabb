# Utils module - errors and logging
