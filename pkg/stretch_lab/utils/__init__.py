from .os_utils import makedirs, write_output
