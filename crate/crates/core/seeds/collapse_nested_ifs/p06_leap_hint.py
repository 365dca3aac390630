def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def century_note(year):
    note = 'plain'
    if year % 4 == 0:
        if year % 100 == 0:
            note = 'century'
    return note
# probe: century_note(1900)
# probe: century_note(1996)
# probe: century_note(2001)
