def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def critic_update(critic, critic_opt, value_loss):
    critic.zero_grad()
    value_loss.backward()
    critic_opt.step()
    return value_loss.detach()
