def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def grade(score):
    if not score >= 50:
        return 'fail'
    else:
        if not score >= 80:
            return 'pass'
        else:
            return 'merit'
# probe: grade(30)
# probe: grade(60)
# probe: grade(95)
