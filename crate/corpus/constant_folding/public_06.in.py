def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def is_leap(year):
    if year % (2 * 2) != 0:
        return False
    if year % (25 * 4) != 0:
        return True
    return year % (4 * 100) == 0
# probe: is_leap(2000)
# probe: is_leap(1900)
# probe: is_leap(2024)
# probe: is_leap(2023)
