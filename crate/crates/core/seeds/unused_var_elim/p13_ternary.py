def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def describe(n):
    kind = 'even' if n % 2 == 0 else 'odd'
    return 'number ' + str(n)
# probe: describe(7)
