def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def first_two(values):
    defaults = [0, 0]
    return values[:2]
# probe: first_two([5, 6, 7])
