def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def not_both(a, b):
    return not (a and b)
# probe: not_both(True, True)
# probe: not_both(True, False)
# probe: not_both(0, 5)
