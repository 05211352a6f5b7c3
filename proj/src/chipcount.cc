#include "ocean/chipcount.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ocean
{

void
ChipParams::Validate() const
{
    if (!(car >= 0.0) || !std::isfinite(car))
    {
        throw std::invalid_argument("car must be a finite value >= 0");
    }
    if (!std::isfinite(spendThreshold))
    {
        throw std::invalid_argument("spend_threshold must be finite");
    }
    if (!std::isfinite(initialBalance))
    {
        throw std::invalid_argument("initial_balance must be finite");
    }
    if (!(ceiling > spendThreshold) || !std::isfinite(ceiling))
    {
        throw std::invalid_argument("chip_ceiling must be finite and above spend_threshold");
    }
    if (initialBalance > ceiling)
    {
        throw std::invalid_argument("initial_balance must not exceed chip_ceiling");
    }
}

ChipLedger::ChipLedger(ChipParams params)
    : m_params(params)
{
    m_params.Validate();
}

double
ChipLedger::Accrued(const Account& a, SimTime now) const
{
    if (a.balance >= m_params.ceiling)
    {
        return a.balance;
    }
    const double grown = a.balance + m_params.car * ToSeconds(now - a.updated);
    return std::min(grown, m_params.ceiling);
}

ChipLedger::Account&
ChipLedger::Touch(NodeId neighbor, SimTime now)
{
    auto [it, inserted] = m_accounts.try_emplace(neighbor);
    if (inserted)
    {
        // Untouched balances have been accruing since the start of the run.
        it->second.balance = m_params.initialBalance;
        it->second.updated = SimTime{};
    }
    it->second.balance = Accrued(it->second, now);
    it->second.updated = now;
    return it->second;
}

double
ChipLedger::Balance(NodeId neighbor, SimTime now) const
{
    auto it = m_accounts.find(neighbor);
    if (it == m_accounts.end())
    {
        return Accrued(Account{m_params.initialBalance, SimTime{}}, now);
    }
    return Accrued(it->second, now);
}

Admission
ChipLedger::AdmitForward(NodeId requester, SimTime now)
{
    Account& a = Touch(requester, now);
    if (a.balance > m_params.spendThreshold)
    {
        a.balance -= 1.0;
        return Admission::Allow;
    }
    return Admission::Deny;
}

void
ChipLedger::Credit(NodeId neighbor, SimTime now)
{
    Account& a = Touch(neighbor, now);
    a.balance = std::min(a.balance + 1.0, m_params.ceiling);
}

void
ChipLedger::CreditOnAccept(NodeId neighbor, SimTime now)
{
    if (m_params.scheme != ChipScheme::Optimistic)
    {
        throw std::logic_error("CreditOnAccept called under the pessimistic scheme");
    }
    Credit(neighbor, now);
}

void
ChipLedger::CreditOnObservedForward(NodeId neighbor, SimTime now)
{
    if (m_params.scheme != ChipScheme::Pessimistic)
    {
        throw std::logic_error("CreditOnObservedForward called under the optimistic scheme");
    }
    Credit(neighbor, now);
}

} // namespace ocean
