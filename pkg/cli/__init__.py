# CLI module - argparse front end
