def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def fits_in_byte(n):
    limit = 2 ** 8 - 1
    return 0 <= n <= limit
# probe: fits_in_byte(255)
# probe: fits_in_byte(256)
# probe: fits_in_byte(-1)
