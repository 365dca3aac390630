def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def bonus(score, attended):
    total = score
    if score > 50:
        if attended:
            total = total + 10
    return total
# probe: bonus(70, True)
# probe: bonus(70, False)
# probe: bonus(20, True)
